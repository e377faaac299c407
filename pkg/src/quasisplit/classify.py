"""Numerical invariants of an involution class.

Root-space bookkeeping at the standard maximal torus: a root is imaginary
when theta0 fixes it and complex otherwise (theta0 preserves positivity, so
no root is sent to its negative here).  Imaginary roots carry a sign eps
built from the pinned signs and the grading vector; eps = +1 marks root
spaces inside the fixed subgroup.  Dimensions, quasi-split ranks, and the
compact subsystem type all come from these counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chevalley import pinned_signs
from .involution import Grading, InvolutionClass
from .rootdata import format_subsystem, identify_subsystem, type_string, Vector
from .weyl import Chamber


def is_imaginary(cls: InvolutionClass, beta: Vector) -> bool:
    return cls.theta0_on_root(beta) == beta


def eps(cls: InvolutionClass, rep: Grading, beta: Vector) -> int:
    """Sign of theta on the root space of an imaginary root.

    Product of the pinned sign and the grading signs at the fixed-node
    coefficients; swapped-node coefficients never contribute because the
    torus part is normalized to +1 there.  Negative coefficients only matter
    mod 2, which Python's % already gives.
    """
    assert is_imaginary(cls, beta), f"{beta} is not imaginary for this class"
    value = pinned_signs(cls.rs, cls.aut).c(beta)
    for k, node in enumerate(cls.fixed_nodes):
        if beta[node - 1] % 2:
            value *= rep[k]
    return value


def is_compact_imaginary(cls: InvolutionClass, rep: Grading, beta: Vector) -> bool:
    return eps(cls, rep, beta) == 1


@dataclass(frozen=True)
class ClassSummary:
    """Everything the reporting layer prints about one class."""

    root_system: str
    class_id: str
    theta0: str
    grading: str
    orbit_size: int
    quasi_split: bool
    dim_group: int
    dim_fixed: int
    dim_torus_fixed: int
    compact_imaginary: int
    noncompact_imaginary: int
    complex_roots: int
    split_rank: int | None
    k_type: str | None


def torus_fixed_dim(cls: InvolutionClass) -> int:
    rs = cls.rs
    node_orbits = len(cls.fixed_nodes) + (rs.rank - len(cls.fixed_nodes)) // 2
    return node_orbits + rs.central_torus_dim


@lru_cache(maxsize=None)
def root_counts(cls: InvolutionClass) -> tuple[int, int, int]:
    """(compact imaginary, noncompact imaginary, complex), over all roots."""
    rep = cls.canonical_rep
    compact = noncompact = cplx = 0
    for beta in cls.rs.roots:
        if is_imaginary(cls, beta):
            if eps(cls, rep, beta) == 1:
                compact += 1
            else:
                noncompact += 1
        else:
            cplx += 1
    return compact, noncompact, cplx


def fixed_group_dim(cls: InvolutionClass) -> int:
    """Dimension of the fixed subgroup: torus part, compact imaginary root
    spaces, and one dimension per complex root pair."""
    compact, _, cplx = root_counts(cls)
    assert cplx % 2 == 0
    return torus_fixed_dim(cls) + compact + cplx // 2


def split_rank(cls: InvolutionClass) -> int | None:
    """Dimension count for the small-torus rank of a quasi-split class.

    dim U + dim T - dim K; None when the class is not quasi-split.
    """
    if not cls.quasi_split:
        return None
    rs = cls.rs
    dim_u = len(rs.roots) // 2
    dim_t = rs.rank + rs.central_torus_dim
    return dim_u + dim_t - fixed_group_dim(cls)


@lru_cache(maxsize=None)
def k_subsystem(cls: InvolutionClass) -> str:
    """Type of the compact-imaginary root subsystem plus its residual torus.

    Only meaningful for inner classes, where every root is imaginary and the
    compact roots form a closed subsystem; the simple ones are the compact
    positives that are not sums of two compact positives.
    """
    assert cls.is_inner, "compact subsystem type is computed for inner classes"
    rs = cls.rs
    rep = cls.canonical_rep
    compact_pos = [b for b in rs.positive_roots if eps(cls, rep, b) == 1]
    compact_set = set(compact_pos)
    simples = []
    for beta in compact_pos:
        decomposable = any(
            tuple(b - g for b, g in zip(beta, gamma)) in compact_set for gamma in compact_pos
        )
        if not decomposable:
            simples.append(beta)
    types = identify_subsystem(rs, simples)
    residual = rs.rank - len(simples) + rs.central_torus_dim
    return format_subsystem(types, residual)


def classify_involution(cls: InvolutionClass) -> ClassSummary:
    compact, noncompact, cplx = root_counts(cls)
    return ClassSummary(
        root_system=type_string(cls.rs),
        class_id=cls.class_id,
        theta0=cls.aut.cycle_string(),
        grading="".join("+" if x == 1 else "-" for x in cls.canonical_rep),
        orbit_size=cls.orbit_size,
        quasi_split=cls.quasi_split,
        dim_group=cls.rs.dim_group(),
        dim_fixed=fixed_group_dim(cls),
        dim_torus_fixed=torus_fixed_dim(cls),
        compact_imaginary=compact,
        noncompact_imaginary=noncompact,
        complex_roots=cplx,
        split_rank=split_rank(cls),
        k_type=k_subsystem(cls) if cls.is_inner else None,
    )


def unipotent_fixed_dim(cls: InvolutionClass, rep: Grading, chamber: Chamber) -> int:
    """Dimension of the theta-fixed part of the unipotent radical at a chamber.

    Compact imaginary roots inside w(positives) each contribute one; complex
    pairs with both members inside contribute one diagonal.
    """
    assert cls.contains(rep)
    total = 0
    for beta in cls.rs.roots:
        if not chamber.is_w_positive(beta):
            continue
        tb = cls.theta0_on_root(beta)
        if tb == beta:
            if eps(cls, rep, beta) == 1:
                total += 1
        elif tb > beta and chamber.is_w_positive(tb):
            total += 1
    return total


def unipotent_image_dim(cls: InvolutionClass, rep: Grading, chamber: Chamber) -> int:
    """Dimension of the image of the fixed unipotent part on the walls.

    Projection of the theta-fixed subalgebra of the unipotent radical to the
    wall root spaces (the abelianization).  A compact imaginary wall
    contributes one; a complex wall whose theta0-partner is w-positive
    contributes one, shared when the partner is itself a wall.
    """
    assert cls.contains(rep)
    walls = set(chamber.images)
    total = 0
    for beta in chamber.images:
        tb = cls.theta0_on_root(beta)
        if tb == beta:
            if eps(cls, rep, beta) == 1:
                total += 1
        elif chamber.is_w_positive(tb):
            if tb in walls:
                if beta < tb:
                    total += 1
            else:
                total += 1
    return total


def admits_generic_character(cls: InvolutionClass, rep: Grading, chamber: Chamber) -> bool:
    """Whether some wall-generic character kills the fixed unipotent part.

    Blocked by a compact imaginary wall (the whole wall space lies in the
    image) or by a complex wall whose partner is w-positive but interior (the
    wall space again lies in the image).  A complex wall pair only forces the
    character to vanish on a diagonal, which generic characters can dodge.
    """
    assert cls.contains(rep)
    walls = set(chamber.images)
    for beta in chamber.images:
        tb = cls.theta0_on_root(beta)
        if tb == beta:
            if eps(cls, rep, beta) == 1:
                return False
        elif chamber.is_w_positive(tb) and tb not in walls:
            return False
    return True
