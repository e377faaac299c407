"""Machine checks for the structural facts the enumeration relies on.

Four named checks, each exhaustive over an explicit scope and reporting
violations rather than raising:

counts            nontrivial inner class totals for the exceptional types,
                  computed twice (full enumeration, and a bare orbit count on
                  sign vectors under simple reflections) and compared against
                  the frozen table.
principal         the class containing the all-minus grading is quasi-split
                  for every simple type in scope, witnessed three ways.
imaginary-signs   at every (class, chamber) pair where a wall-generic
                  character survives, the simple roots of the w-positive
                  imaginary subsystem all carry sign -1.
support           every root has connected support in the diagram.

The imaginary-signs check accepts a fault-injection switch that flips one
sign on purpose; a healthy detector must then produce at least one violation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .classify import admits_generic_character, eps, unipotent_image_dim
from .involution import InvolutionClass, enumerate_involution_classes, find_class
from .rootdata import RootSystem, Vector, build_root_system, identity_automorphism, support_connected
from .weyl import (
    EXHAUSTIVE_WEYL_BOUND,
    Chamber,
    all_chambers,
    identity_chamber,
    random_chambers,
    reflect,
)

EXPECTED_EXCEPTIONAL_INNER = {"G2": 1, "F4": 2, "E6": 2, "E7": 3, "E8": 2}

DEFAULT_SAMPLES = 2000
DEFAULT_EXHAUSTIVE_CUTOFF = 2000


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"{status} {self.name}"
        if self.details:
            return head + "\n" + "\n".join("  " + d for d in self.details)
        return head


def simple_types_up_to(max_rank: int) -> list[str]:
    out = [f"A{n}" for n in range(1, max_rank + 1)]
    out += [f"B{n}" for n in range(2, max_rank + 1)]
    out += [f"C{n}" for n in range(3, max_rank + 1)]
    out += [f"D{n}" for n in range(4, max_rank + 1)]
    out += [f"E{n}" for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append("F4")
    if max_rank >= 2:
        out.append("G2")
    return out


def transport_orbit_partition(rs: RootSystem) -> list[frozenset]:
    """Sign-vector orbits under simple reflections, built with none of the
    class machinery; the independent route for the counts check."""
    rank = rs.rank
    simples = rs.simple_roots
    gens = []
    for k in range(1, rank + 1):
        masks = [tuple(x % 2 for x in reflect(rs, k, simples[i])) for i in range(rank)]
        gens.append(masks)
    orbits = []
    unseen = set(itertools.product((1, -1), repeat=rank))
    while unseen:
        start = min(unseen)
        orbit = {start}
        queue = [start]
        unseen.discard(start)
        while queue:
            s = queue.pop()
            for masks in gens:
                image = []
                for mask in masks:
                    v = 1
                    for j, m in enumerate(mask):
                        if m:
                            v *= s[j]
                    image.append(v)
                t = tuple(image)
                if t in unseen:
                    unseen.discard(t)
                    orbit.add(t)
                    queue.append(t)
        orbits.append(frozenset(orbit))
    return orbits


def check_counts() -> CheckResult:
    details = []
    ok = True
    for type_str, expected in sorted(EXPECTED_EXCEPTIONAL_INNER.items()):
        rs = build_root_system(type_str)
        classes = [c for c in enumerate_involution_classes(rs) if c.is_inner]
        nontrivial = [c for c in classes if not c.is_trivial]
        route1 = len(nontrivial)
        partition1 = {frozenset(c.orbit) for c in classes}
        partition2 = set(transport_orbit_partition(rs))
        route2 = len(partition2) - 1
        agree = partition1 == partition2
        good = route1 == expected and route2 == expected and agree
        ok = ok and good
        details.append(
            f"{type_str}: enumerated {route1}, transport {route2}, expected {expected},"
            f" partitions {'agree' if agree else 'DIFFER'}"
        )
    return CheckResult("counts", ok, details)


def check_principal(max_rank: int = 8) -> CheckResult:
    details = []
    ok = True
    for type_str in simple_types_up_to(max_rank):
        rs = build_root_system(type_str)
        rep = tuple([-1] * rs.rank)
        cls = find_class(rs, identity_automorphism(rs), rep)
        ch = identity_chamber(rs)
        w1 = cls.quasi_split
        w2 = admits_generic_character(cls, rep, ch)
        dim = unipotent_image_dim(cls, rep, ch)
        good = w1 and w2 and dim == 0
        ok = ok and good
        if not good:
            details.append(
                f"{type_str}: quasi_split={w1} generic={w2} image_dim={dim}"
            )
    if ok:
        details.append(f"all-minus class quasi-split for {len(simple_types_up_to(max_rank))} types")
    return CheckResult("principal", ok, details)


class _ClassData:
    """Per-class caches for the chamber-major imaginary-signs sweep."""

    def __init__(self, cls: InvolutionClass):
        self.cls = cls
        rs = cls.rs
        self.theta = {b: cls.theta0_on_root(b) for b in rs.roots}
        rep = cls.canonical_rep
        self.eps = {b: eps(cls, rep, b) for b in rs.roots if self.theta[b] == b}

    def admits_generic(self, walls: tuple[Vector, ...], wall_set: set, w_pos: frozenset) -> bool:
        for beta in walls:
            tb = self.theta[beta]
            if tb == beta:
                if self.eps[beta] == 1:
                    return False
            elif tb in w_pos and tb not in wall_set:
                return False
        return True

    def imaginary_simples(self, w_pos: frozenset) -> list[Vector]:
        members = [b for b in self.eps if b in w_pos]
        member_set = set(members)
        out = []
        for beta in members:
            decomposable = False
            for gamma in members:
                delta = tuple(x - y for x, y in zip(beta, gamma))
                if delta in member_set:
                    decomposable = True
                    break
            if not decomposable:
                out.append(beta)
        return out


def _chambers_for(rs: RootSystem, samples: int, seed: int, exhaustive: bool,
                  cutoff: int = DEFAULT_EXHAUSTIVE_CUTOFF) -> tuple[list[Chamber], str]:
    order = rs.weyl_group_order()
    if order <= cutoff or (exhaustive and order <= max(EXHAUSTIVE_WEYL_BOUND, 51840)):
        return list(all_chambers(rs)), f"exhaustive ({order} chambers)"
    return random_chambers(rs, samples, seed), f"sampled ({samples} chambers, seed {seed})"


def check_imaginary_signs(
    max_rank: int = 6,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    exhaustive: bool = False,
    inject_fault: bool = False,
) -> CheckResult:
    """Sweep (class, chamber) pairs; where a generic character survives, the
    w-simple imaginary roots must all be noncompact."""
    violations = []
    scanned = 0
    fault_pending = inject_fault
    details = []
    for type_str in simple_types_up_to(max_rank):
        rs = build_root_system(type_str)
        data = [_ClassData(c) for c in enumerate_involution_classes(rs)]
        chambers, mode = _chambers_for(rs, samples, seed, exhaustive)
        details.append(f"{type_str}: {mode}, {len(data)} classes")
        for ch in chambers:
            w_pos = ch.w_positive_roots()
            walls = ch.images
            wall_set = set(walls)
            for d in data:
                if not d.admits_generic(walls, wall_set, w_pos):
                    continue
                scanned += 1
                simples = d.imaginary_simples(w_pos)
                for i, beta in enumerate(simples):
                    sign = d.eps[beta]
                    if fault_pending and i == 0 and simples:
                        sign = -sign
                        fault_pending = False
                    if sign != -1:
                        violations.append(
                            f"{type_str} class {d.cls.class_id} word {ch.word}"
                            f" root {beta} sign {sign}"
                        )
    details.append(f"{scanned} surviving (class, chamber) pairs checked")
    if inject_fault:
        passed = len(violations) >= 1
        details.append(f"fault injection produced {len(violations)} violation(s)")
    else:
        passed = not violations
        details.extend(violations[:20])
    return CheckResult("imaginary-signs", passed, details)


def check_support(max_rank: int = 8) -> CheckResult:
    details = []
    ok = True
    total = 0
    for type_str in simple_types_up_to(max_rank):
        rs = build_root_system(type_str)
        for beta in rs.roots:
            _, connected = support_connected(rs, beta)
            total += 1
            if not connected:
                ok = False
                details.append(f"{type_str}: root {beta} has disconnected support")
    details.append(f"{total} roots checked")
    return CheckResult("support", ok, details)


CHECKS = ("counts", "principal", "imaginary-signs", "support")


def run_checks(
    names: list[str],
    max_rank: int = 6,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    exhaustive: bool = False,
    inject_fault: bool = False,
) -> list[CheckResult]:
    results = []
    for name in names:
        if name == "counts":
            results.append(check_counts())
        elif name == "principal":
            results.append(check_principal(max_rank=max(max_rank, 8)))
        elif name == "imaginary-signs":
            results.append(
                check_imaginary_signs(
                    max_rank=max_rank,
                    samples=samples,
                    seed=seed,
                    exhaustive=exhaustive,
                    inject_fault=inject_fault,
                )
            )
        elif name == "support":
            results.append(check_support(max_rank=max(max_rank, 8)))
        else:
            raise ValueError(f"unknown check {name!r}")
    return results
