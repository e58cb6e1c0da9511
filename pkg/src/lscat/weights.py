"""Category weight and the Steenrod-module obstruction.

The weight of a nonzero cohomology class is the filtration of its
representative on the E-infinity page of the bar spectral sequence; the
space weight is the maximum over reduced classes.

The module-weight lower bound comes from a Steenrod obstruction in the
truncated models: a class z of the stage-m model with Sq^k z restricting
from a nonzero cohomology class u that cannot lie in the image of Sq^k
upstairs because its preimage degree vanishes identically.  Such a
witness rules out an operation-preserving retraction at stage m (and, by
restriction, at every smaller stage), so the bound is 1 + the largest
witnessed m.

All truncated-model computations happen in the associated graded; a
witness is only reported when residual ("annihilated-summand") classes in
the target degree cannot absorb the identity, exactly when the preimage
degree has dimension zero and no residual class shares the target degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

from lscat.algebra import Algebra, AlgebraPresentation, Element, Generator
from lscat.specseq import (
    BUCKET_RESIDUAL,
    BigradedPage,
    DifferentialSpec,
    TruncationClass,
    classify_truncation,
    infer_differentials,
    koszul_e2,
    run_to_e_infinity,
    truncate,
)
from lscat.spaces import SpacePresentation
from lscat.steenrod import SteenrodAction


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class ObstructionWitness:
    m: int
    k: int
    z_label: str
    u: str
    u_degree: int
    vanishing_degree: int
    facts: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "class": self.z_label,
            "target": self.u,
            "target_degree": self.u_degree,
            "vanishing_degree": self.vanishing_degree,
            "facts": list(self.facts),
        }


class LoopSpaceModel:
    """All spectral-sequence-derived data for one space presentation.

    Lazily computes the E2 page, the forced differentials, E-infinity,
    stage truncations, the weight assignment, and obstruction witnesses.
    """

    def __init__(
        self,
        space: SpacePresentation,
        degree_cap: int | None = None,
        max_candidates_per_gen: int = 10**6,
    ):
        if degree_cap is not None and degree_cap != space.degree_cap:
            space = replace(
                space,
                degree_cap=degree_cap,
                cohomology=replace(space.cohomology, degree_cap=degree_cap),
                loop_homology=(
                    replace(space.loop_homology, degree_cap=degree_cap)
                    if space.loop_homology
                    else None
                ),
            )
        self.space = space
        self.max_candidates_per_gen = max_candidates_per_gen
        self.algebra: Algebra = space.algebra()
        self.action: SteenrodAction = space.action(self.algebra)
        self._truncations: dict[int, BigradedPage] = {}
        self._reports: dict[int, list[TruncationClass]] = {}
        self._witnesses: dict[int, ObstructionWitness | None] = {}

    # -- spectral sequence --------------------------------------------------

    @cached_property
    def e2(self) -> BigradedPage:
        if self.space.loop_homology is None:
            raise WeightError(f"{self.space.name}: no loop homology given")
        return koszul_e2(self.space.loop_homology)

    @cached_property
    def differentials(self) -> list[DifferentialSpec]:
        specs = infer_differentials(
            self.e2,
            self.space.permanent_cycles,
            self.algebra,
            self.max_candidates_per_gen,
        )
        if len(specs) != 1:
            raise WeightError(
                f"{self.space.name}: differential inference is ambiguous "
                f"({len(specs)} consistent assignments)"
            )
        return specs

    @cached_property
    def e_infinity(self) -> BigradedPage:
        return run_to_e_infinity(self.e2, self.differentials)

    @cached_property
    def surviving(self) -> set:
        return self.e_infinity.surviving_leading_monomials()

    def truncation(self, m: int) -> BigradedPage:
        if m not in self._truncations:
            self._truncations[m] = truncate(self.e2, m, self.differentials)
        return self._truncations[m]

    def stage_report(self, m: int) -> list[TruncationClass]:
        if m not in self._reports:
            extra = self._partial_extra
            self._reports[m] = classify_truncation(
                self.truncation(m),
                m,
                self.surviving,
                partial_gen=self._koszul_name_of_extra(extra) if extra else None,
                extension_height=extra.extension_height if extra else 3,
            )
        return self._reports[m]

    # -- generator matching -------------------------------------------------

    @cached_property
    def _partial_extra(self):
        extras = self.space.extra_generators
        if not extras:
            return None
        if len(extras) > 1:
            raise WeightError("at most one partial-product generator supported")
        return extras[0]

    def _koszul_name_of_extra(self, extra) -> str | None:
        name = f"x1_{extra.t}"
        return name if name in self.e2._index else None

    @cached_property
    def gen_match(self) -> dict[str, tuple[str, str]]:
        """Koszul generator name -> ("coh" | "extra", matched name).

        A suspension class in bidegree (1, t) matches the unique
        cohomology generator of degree t + 1, else the declared extra
        generator with that internal degree.
        """
        match: dict[str, tuple[str, str]] = {}
        for g in self.e2.generators:
            coh = [c for c in self.algebra.generators if c.degree == g.t + 1]
            if len(coh) == 1:
                match[g.name] = ("coh", coh[0].name)
                continue
            if len(coh) > 1:
                raise WeightError(
                    f"ambiguous suspension match for {g.name}: {coh}"
                )
            extra = self._partial_extra
            if extra is not None and extra.t == g.t:
                match[g.name] = ("extra", extra.name)
            # else: unmatched; only an error if something needs it.
        return match

    @cached_property
    def _coh_to_koszul(self) -> dict[str, int]:
        out = {}
        for kname, (kind, target) in self.gen_match.items():
            if kind == "coh":
                out[target] = self.e2._index[kname]
        return out

    def _lattice_exps_of_monomial(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        """Cohomology monomial -> its E-infinity representative monomial."""
        out = [0] * len(self.e2.generators)
        for i, e in enumerate(exps):
            if not e:
                continue
            name = self.algebra.generators[i].name
            if name not in self._coh_to_koszul:
                raise WeightError(
                    f"cohomology generator {name} has no suspension class"
                )
            out[self._coh_to_koszul[name]] = e
        return tuple(out)

    # -- weights ------------------------------------------------------------

    @cached_property
    def weight_map(self) -> dict[tuple[int, ...], int]:
        """Filtration of every positive-degree cohomology basis monomial."""
        out = {}
        for mono in self.algebra.monomials():
            if mono.degree == 0:
                continue
            lattice = self._lattice_exps_of_monomial(mono.exps)
            if lattice not in self.surviving:
                raise WeightError(
                    f"{mono} has no surviving E-infinity representative"
                )
            out[mono.exps] = sum(lattice)
        return out

    def wgt(self, u: Element) -> int:
        """Filtration of u's E-infinity representative."""
        if not u:
            raise WeightError("weight of the zero class is undefined")
        if any(not any(exps) for exps in u.terms):
            raise WeightError("weight of the unit is undefined")
        return min(self.weight_map[exps] for exps in u.terms)

    def wgt_space(self) -> int:
        """Maximum weight over the reduced cohomology."""
        if not self.weight_map:
            return 0
        return max(self.weight_map.values())

    def cup_length(self) -> int:
        return self.algebra.cup_length()

    # -- module-weight obstruction -------------------------------------------

    @cached_property
    def _extended_algebra(self) -> Algebra:
        gens = list(self.algebra.generators)
        extra = self._partial_extra
        if extra is not None:
            gens.append(Generator(extra.name, extra.degree, 2))
        return Algebra(AlgebraPresentation(tuple(gens), self.algebra.degree_cap))

    @cached_property
    def _extended_action(self) -> SteenrodAction:
        ext = self._extended_algebra
        table = {}
        for gen, k, value in self.space.steenrod:
            table[(gen, k)] = ext.parse_element(value)
        extra = self._partial_extra
        if extra is not None:
            for k, value in extra.steenrod.items():
                table[(extra.name, k)] = ext.parse_element(value)
        return SteenrodAction(ext, table)

    def _extended_exps_of_lattice(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        ext = self._extended_algebra
        out = [0] * len(ext.generators)
        idx = {g.name: i for i, g in enumerate(ext.generators)}
        for kname, e in zip((g.name for g in self.e2.generators), exps):
            if not e:
                continue
            if kname not in self.gen_match:
                raise WeightError(f"{kname} matches no cohomology class")
            _, target = self.gen_match[kname]
            out[idx[target]] = e
        return tuple(out)

    def find_obstruction(self, m: int) -> ObstructionWitness | None:
        """First Steenrod witness against a retraction at stage m, or None.

        Absence of a witness proves nothing.
        """
        if m in self._witnesses:
            return self._witnesses[m]
        witness = self._find_obstruction(m)
        self._witnesses[m] = witness
        return witness

    def _find_obstruction(self, m: int) -> ObstructionWitness | None:
        try:
            report = self.stage_report(m)
        except WeightError:
            return None
        ext = self._extended_algebra
        ext_action = self._extended_action
        extra = self._partial_extra
        extra_idx = (
            [i for i, g in enumerate(ext.generators) if extra and g.name == extra.name]
        )
        alive = {
            cls.leading for cls in report
        }
        residual_degrees = {
            cls.degree for cls in report if cls.bucket == BUCKET_RESIDUAL
        }
        computable = [cls for cls in report if cls.bucket != BUCKET_RESIDUAL]

        squares = {}
        for cls in computable:
            z_ext = ext.element([self._extended_exps_of_lattice(cls.leading)])
            squares[cls.leading] = ext_action.total_square(z_ext)

        max_k = max((g.degree for g in ext.generators), default=0)
        for k in range(1, max_k + 1):
            for cls in computable:
                value = squares[cls.leading].homogeneous_part(cls.degree + k)
                if not value:
                    continue
                plain = []
                mixed = []
                for exps in value.terms:
                    if any(exps[i] for i in extra_idx):
                        mixed.append(exps)
                    else:
                        plain.append(exps)
                if not plain:
                    continue
                # Partial-product terms cannot be controlled in the
                # associated graded; demand they vanish outright.
                if mixed:
                    continue
                u_exps = [
                    tuple(e for i, e in enumerate(exps) if i not in extra_idx)
                    for exps in plain
                ]
                u = self.algebra.element(u_exps)
                if not u:
                    continue
                degree = cls.degree + k
                # u must restrict nontrivially to the stage-m model.
                if not any(
                    self._lattice_exps_of_monomial(e) in alive for e in u.terms
                ):
                    continue
                # Hard form: the preimage degree vanishes identically.
                if self.algebra.basis(cls.degree):
                    continue
                # No residual class can absorb the identity at the target.
                if degree in residual_degrees:
                    continue
                assert not self.action.image_of_sq(k, degree)
                witness = ObstructionWitness(
                    m=m,
                    k=k,
                    z_label=str(
                        ext.element([self._extended_exps_of_lattice(cls.leading)])
                    ),
                    u=str(u),
                    u_degree=degree,
                    vanishing_degree=cls.degree,
                    facts=(
                        f"Sq^{k} of the stage-{m} class equals the restriction "
                        f"of a nonzero degree-{degree} class",
                        f"the cohomology of the space vanishes in degree "
                        f"{cls.degree}, so nothing upstairs can map onto it "
                        f"under Sq^{k}",
                        f"no residual stage-{m} class lives in degree {degree}",
                    ),
                )
                return witness
        return None

    def mwgt_lower_bound(self, m_max: int | None = None) -> int:
        """1 + the largest stage with a witness (0 if none up to m_max)."""
        if self.space.loop_homology is None:
            return 0
        if m_max is None:
            m_max = self.space.degree_cap
        best = -1
        for m in range(m_max + 1):
            if self.find_obstruction(m) is not None:
                best = m
        return best + 1 if best >= 0 else 0
