"""End-to-end pipeline: enumerate, complement, classify, and compare with reference data."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import poset as po
from .errors import EnumerationCapExceeded, SizeCapExceeded
from .golden import EXAMPLES
from .projections import (DEFAULT_SEARCH_CAP, check_lemma1, check_lemma4, check_lemma5,
                          check_lemma6, check_lemma7, check_order_homomorphism,
                          check_orthogonal_join, check_splitting_closed,
                          check_th4_bijection, enumerate_projections, projection_of,
                          splitting_subsemimodules)
from .semimodule import DEFAULT_SIZE_CAP, FreeSemimodule, check_nondegenerate
from .semiring import FiniteSemiring, builtin, classify, is_ring
from .sublattice import (DEFAULT_ENUMERATION_CAP, IndexedLattice, Report, check_lemma3,
                         check_prop1, check_sampled_laws, check_th2_hypothesis, check_theorem1,
                         closed_subsemimodules, enumerate_subsemimodules, perp_mask,
                         sample_subsemimodules)

SCHEMA_VERSION = 1

# Lattice verdicts on L(M) scan all pairs/triples; skipped above this size.
POSET_CHECK_LIMIT = 400

CHECKS = ("prop1", "lemma3", "theorem1", "th2", "lemma5", "homomorphism", "th4",
          "lemma1", "lemma4", "lemma6", "lemma7", "splitting-closed", "orthogonal-join")
DEFAULT_CHECKS = ("prop1", "theorem1", "th2", "lemma5", "homomorphism", "th4", "lemma1",
                  "lemma7", "splitting-closed")
RING_ONLY = {"th4", "lemma1", "lemma4", "lemma6", "lemma7", "orthogonal-join"}


@dataclass
class AnalysisConfig:
    source: str
    rank: int
    cap_subs: int = DEFAULT_ENUMERATION_CAP
    cap_proj: int = DEFAULT_SEARCH_CAP
    size_cap: int = DEFAULT_SIZE_CAP
    out: str | None = None
    dot: bool = False
    checks: tuple = DEFAULT_CHECKS
    timing: bool = False

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if min(self.cap_subs, self.cap_proj, self.size_cap) < 1:
            raise ValueError("caps must be positive")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


# ----------------------------------------------------------------- labelling

def overlay_for(S: FiniteSemiring, k: int):
    """Reference data whose names apply to (S, k), if any."""
    for ex in EXAMPLES.values():
        if k == ex["rank"] and S == builtin(ex["semiring"]) and S.labels == builtin(ex["semiring"]).labels:
            return ex
    return None


def subsemimodule_labels(M: FreeSemimodule, subs, prefix="L") -> dict:
    """mask -> display name; reference names where available, else prefix + index."""
    names = {U.mask: f"{prefix}{i}" for i, U in enumerate(subs)}
    ex = overlay_for(M.semiring, M.rank)
    if ex is not None:
        for name, vectors in ex["subsemimodules"].items():
            mask = _mask_from_labels(M, vectors)
            if mask in names:
                names[mask] = name
    return names


def _mask_from_labels(M, vectors):
    S = M.semiring
    return M.mask_of(tuple(S.index(c) for c in v) for v in vectors)


def vector_labels(M, v):
    return [M.semiring.labels[c] for c in v]


# --------------------------------------------------------------- verdicts

def lattice_verdicts(P: po.FinitePoset, names=None) -> dict:
    out = {"size": P.m, "lattice": po.is_lattice(P)}
    if out["lattice"]:
        w = po.n5_witness(P)
        out["modular"] = w is None
        if w is not None and names is not None:
            out["n5_witness"] = [names[i] for i in w]
        out["distributive"] = po.is_distributive(P)
        out["boolean"] = po.is_boolean_algebra(P)
    out["atomic"] = po.is_atomic(P)
    if P.involution is not None:
        out["antitone_involution"] = po.is_antitone_involution(P)
        out["orthoposet"] = po.is_orthoposet(P)
        if out["orthoposet"]:
            out["orthomodular"] = po.is_orthomodular_poset(P)
        out["mo2"] = po.is_iso_MO2(P)
    return out


def _poset(subs, names, with_perp):
    M = subs[0].ambient
    inv = None
    if with_perp:
        inv = lambda U: perp_mask(M, U.mask)  # noqa: E731
    return po.poset_from_subsets(subs, inv, [names[U.mask] for U in subs])


# ---------------------------------------------------------------- pipeline

def run_checks(M: FreeSemimodule, checks, subs=None, splitting=None, pro=None) -> dict:
    ring = is_ring(M.semiring)
    lat = IndexedLattice(M, subs) if subs is not None else None
    out = {}
    for name in checks:
        if name in RING_ONLY and not ring:
            out[name] = {"status": "skipped", "reason": "not a ring"}
            continue
        if name in ("prop1", "lemma3", "theorem1", "th2") and lat is None:
            out[name] = {"status": "skipped", "reason": "L(M) not enumerated"}
            continue
        if name == "prop1":
            rep = check_prop1(M, lat)
        elif name == "lemma3":
            rep = check_lemma3(M, lat)
        elif name == "theorem1":
            rep = check_theorem1(M, lat)
        elif name == "th2":
            holds, rep = check_th2_hypothesis(M, lat)
            out[name] = {"status": "pass" if rep.ok or not holds else "fail",
                         "hypothesis": holds, "clauses": list(rep)}
            continue
        elif name == "lemma5":
            rep = check_lemma5(M, pro)
        elif name == "homomorphism":
            rep = check_order_homomorphism(M, pro)
        elif name == "th4":
            rep = check_th4_bijection(M, pro, splitting)
        elif name == "lemma1":
            rep = check_lemma1(M, pro)
        elif name == "lemma4":
            rep = check_lemma4(M, pro)
        elif name == "lemma6":
            rep = check_lemma6(M, pro)
        elif name == "lemma7":
            rep = check_lemma7(M, splitting)
        elif name == "splitting-closed":
            rep = check_splitting_closed(M, splitting)
        elif name == "orthogonal-join":
            rep = check_orthogonal_join(M, splitting)
        out[name] = {"status": "pass" if rep.ok else "fail", "clauses": list(rep)}
    return out


def analyze(S: FiniteSemiring, config: AnalysisConfig):
    """Run the whole pipeline; returns ``(report_dict, dot_files)``."""
    timings = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = round(now - clock, 6)
        clock = now

    M = FreeSemimodule(S, config.rank, size_cap=config.size_cap)
    subs = enumerate_subsemimodules(M, cap=config.cap_subs)
    lap("enumerate")
    names = subsemimodule_labels(M, subs)
    closed = closed_subsemimodules(M, subs)
    splitting = splitting_subsemimodules(M, subs)
    lap("closed_splitting")

    ring = is_ring(S)
    pro = enumerate_projections(M, cap=config.cap_proj)
    lap("projections")

    L = _poset(subs, names, with_perp=False) if len(subs) <= POSET_CHECK_LIMIT else None
    Lc = _poset(closed, names, with_perp=True)
    Ls = _poset(splitting, names, with_perp=True)
    posets = {
        "L": lattice_verdicts(L, L.labels) if L is not None else {
            "size": len(subs), "status": "skipped", "reason": f"more than {POSET_CHECK_LIMIT}"},
        "Lc": lattice_verdicts(Lc, Lc.labels),
        "Ls": lattice_verdicts(Ls, Ls.labels),
    }
    posets["Ls"]["antiisomorphic_to_powerset"] = po.antiisomorphic_to_powerset(Ls, M.rank) \
        if len(splitting) == 2 ** M.rank else False
    lap("posets")

    projections = {
        "count": len(pro),
        "images_splitting": sum(1 for P in pro if P.image().mask in {U.mask for U in splitting}),
        "matrices": [P.labels() for P in pro],
    }
    if ring:
        th4 = check_th4_bijection(M, pro, splitting)
        projections["bijection"] = "pass" if th4.ok else "fail"
        projections["projection_of"] = {names[U.mask]: projection_of(M, U).labels()
                                        for U in splitting}
    else:
        projections["bijection"] = "not-a-ring"

    checks = run_checks(M, config.checks, subs, splitting, pro)
    lap("checks")

    report = {
        "schema": SCHEMA_VERSION,
        "semiring": {"name": S.name, "elements": list(S.labels), "classification": classify(S)},
        "rank": M.rank,
        "module_size": M.size,
        "counts": {"L": len(subs), "Lc": len(closed), "Ls": len(splitting), "Pro": len(pro)},
        "subsemimodules": [
            {"name": names[U.mask], "members": [vector_labels(M, v) for v in U.members]}
            for U in subs],
        "perp": {names[U.mask]: names[perp_mask(M, U.mask)] for U in subs},
        "closed": [names[U.mask] for U in closed],
        "splitting": [names[U.mask] for U in splitting],
        "posets": posets,
        "projections": projections,
        "checks": checks,
    }
    if config.timing:
        report["timing"] = timings

    dots = {}
    if config.dot:
        if L is not None:
            dots["L.dot"] = po.to_dot(L, "L")
        dots["Lc.dot"] = po.to_dot(Lc, "Lc")
        dots["Ls.dot"] = po.to_dot(Ls, "Ls")
    return report, dots


# ------------------------------------------------------------- reproduction

def reproduce(example_id: str) -> list:
    """Recompute a reference example and list every difference (empty = match)."""
    ex = EXAMPLES[example_id]
    S = builtin(ex["semiring"])
    M = FreeSemimodule(S, ex["rank"])
    subs = enumerate_subsemimodules(M)
    diffs = []

    gold = {name: _mask_from_labels(M, vs) for name, vs in ex["subsemimodules"].items()}
    computed = {U.mask for U in subs}
    if set(gold.values()) != computed:
        diffs.append(f"subsemimodules: expected {len(gold)}, computed {len(computed)}; "
                     f"missing {sorted(set(gold) - set(n for n, m in gold.items() if m in computed))}")
        return diffs
    name_of = {m: n for n, m in gold.items()}

    for name, mask in gold.items():
        got = name_of[perp_mask(M, mask)]
        if got != ex["perp"][name]:
            diffs.append(f"perp {name}: expected {ex['perp'][name]}, computed {got}")

    closed = [name_of[U.mask] for U in closed_subsemimodules(M, subs)]
    if set(closed) != set(ex["closed"]):
        diffs.append(f"closed: expected {sorted(ex['closed'])}, computed {sorted(closed)}")
    splitting = splitting_subsemimodules(M, subs)
    split_names = [name_of[U.mask] for U in splitting]
    if set(split_names) != set(ex["splitting"]):
        diffs.append(f"splitting: expected {sorted(ex['splitting'])}, computed {sorted(split_names)}")

    def cover_diff(label, family, expected):
        P = po.poset_from_subsets([gold[n] for n in family])
        got = {(family[i], family[j]) for i, j in po.hasse_edges(P)}
        if got != set(expected):
            diffs.append(f"{label}: missing {sorted(set(expected) - got)}, "
                         f"unexpected {sorted(got - set(expected))}")

    cover_diff("Hasse diagram of L(M)", list(gold), ex["covers"])
    if "closed_covers" in ex:
        cover_diff("Hasse diagram of L_c(M)", ex["closed"], ex["closed_covers"])
    if "splitting_covers" in ex:
        cover_diff("Hasse diagram of L_s(M)", ex["splitting"], ex["splitting_covers"])
    return diffs


# ------------------------------------------------------------- theorem battery
#
# Checks needing all of L(M) (pairs and triples of subsemimodules) run when
# |L(M)| <= BATTERY_SUBS_LIMIT.  Everything else only needs L_c(M), which is
# generated directly, and the projection scan, bounded by BATTERY_PROJ_LIMIT
# candidate matrices.

BATTERY_MODULE_LIMIT = 256
BATTERY_SUBS_LIMIT = 150
BATTERY_CLOSED_LIMIT = 5000
BATTERY_PROJ_LIMIT = 20_000
BATTERY_SAMPLE = 40
BATTERY_SAMPLED_CLOSED = 32


@dataclass
class BatteryResult:
    name: str
    rank: int
    module_size: int
    subs: int | None = None
    closed: int | None = None
    reports: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)

    @property
    def violations(self) -> list:
        return [(check, e) for check, rep in self.reports.items() for e in rep
                if e["status"] != "pass"]


def battery_instances(module_limit=BATTERY_MODULE_LIMIT):
    """Every builtin (semiring name, rank) with |S|^k <= module_limit."""
    names = ["bool"] + [f"z{n}" for n in range(1, 17)] + [f"chain{n}" for n in range(3, 17)]
    for name in names:
        n = builtin(name).n
        k = 1
        while n ** k <= module_limit:
            yield name, k
            if n == 1:
                break
            k += 1


def _single(clause, witness):
    rep = Report()
    rep.add(clause, witness)
    return rep


def run_battery_instance(name: str, k: int, *, subs_limit=BATTERY_SUBS_LIMIT,
                         closed_limit=BATTERY_CLOSED_LIMIT,
                         proj_limit=BATTERY_PROJ_LIMIT, sample_size=BATTERY_SAMPLE,
                         sampled_closed=BATTERY_SAMPLED_CLOSED) -> BatteryResult:
    """Run every applicable theorem check on one builtin instance.

    Checks that cannot run within the limits are listed in ``skipped`` with
    the reason; they are never silently dropped.  When L(M) is too large the
    pairwise laws also run on a seeded random sample (``*-sampled`` reports).
    """
    S = builtin(name)
    M = FreeSemimodule(S, k)
    res = BatteryResult(name, k, M.size)
    r, skip = res.reports, res.skipped
    ring = is_ring(S)

    r["nondegenerate"] = Report()
    r["nondegenerate"].add("basis-separates", None if check_nondegenerate(M) else M.rank)
    r["nondegenerate"].add("only-zero-orthogonal-to-all",
                    None if perp_mask(M, M.full_mask) == 1 else "nonzero vector")

    subs = None
    try:
        subs = enumerate_subsemimodules(M, cap=subs_limit)
        res.subs = len(subs)
    except EnumerationCapExceeded:
        for check in ("prop1", "lemma3", "theorem1"):
            skip[check] = f"|L(M)| > {subs_limit}"
    if subs is not None:
        lat = IndexedLattice(M, subs)
        r["prop1"] = check_prop1(M, lat)
        r["lemma3"] = check_lemma3(M, lat)
        r["theorem1"] = check_theorem1(M, lat)
        closed = closed_subsemimodules(M, subs)
        generated = closed_subsemimodules(M)
        r["closed-generation"] = _single(
            "perp-image-equals-generated",
            None if [U.mask for U in closed] == [U.mask for U in generated] else len(generated))
    else:
        try:
            closed = closed_subsemimodules(M, cap=closed_limit)
        except EnumerationCapExceeded:
            for check in ("splitting-closed", "orthoposet", "lemma7", "splitting-orthomodular"):
                skip[check] = f"|L_c(M)| > {closed_limit}"
            closed = None
    if subs is None:
        # the full pair/triple checks were skipped; run them on a seeded sample
        rng = random.Random(f"{name}^{k}")
        sample = sample_subsemimodules(M, sample_size, rng)
        pool = [U.mask for U in closed] if closed is not None else []
        if len(pool) > sampled_closed:
            pool = rng.sample(pool, sampled_closed)
        pool = sorted(set(pool) | {perp_mask(M, perp_mask(M, m)) for m in sample})
        r.update(check_sampled_laws(M, sample, pool))
    if closed is not None:
        res.closed = len(closed)
        splitting = splitting_subsemimodules(M, closed)
        if subs is not None:
            r["splitting-filter"] = _single(
                "L_c-filter-equals-L-filter",
                None if splitting == splitting_subsemimodules(M, subs) else len(splitting))
        r["splitting-closed"] = check_splitting_closed(M, splitting)
        Ls = po.poset_from_subsets(splitting, lambda U: perp_mask(M, U.mask))
        r["orthoposet"] = _single("splitting-orthoposet",
                                  None if po.is_orthoposet(Ls) else len(splitting))
        if ring:
            r["lemma7"] = check_lemma7(M, splitting)
            w = po.orthomodular_witness(Ls)
            r["splitting-orthomodular"] = _single("splitting-orthomodular", None if w is None else list(w))

    if ring:
        candidates = S.n ** (k * (k + 1) // 2)
        if candidates > proj_limit:
            skip["lemma1"] = f"{candidates} candidate matrices > {proj_limit}"
            skip["projections-orthomodular"] = skip["lemma1"]
        else:
            pro = enumerate_projections(M)
            r["lemma1"] = check_lemma1(M, pro)
            w = po.orthomodular_witness(pro.as_poset())
            r["projections-orthomodular"] = _single("projections-orthomodular",
                                                None if w is None else list(w))
            if closed is not None:
                r["projection-bijection"] = check_th4_bijection(M, pro, splitting)
    return res
