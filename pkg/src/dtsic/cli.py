"""Command-line front end: construct the catalog, run verification
sweeps, and export the machine-readable artifacts.

Exit code contract: 0 iff every executed check passed.  Exact values are
printed as rationals; floats appear only for entropies.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import functools
import itertools
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import compat, designs, ensembles, finitegeo, grouparith, triples
from .ensembles import (LABELS, ProbVector, build_catalog, enumerate_min_entropy,
                        qbic_check_general, qbic_check_hoggar, quadratic_check,
                        rep_of_vector, reconstruct, shannon_entropy, sic_element_rep,
                        signed_pm_sum, state_overlap, zero_count_bound)
from .report import ReportBundle, fmt

SECTION_ORDER = ("sic", "triples", "designs", "compat", "geometry")


class Context:
    """Shared, immutable inputs for the verification sweeps."""

    @functools.cached_property
    def hoggar(self):
        return build_catalog("hoggar")

    @functools.cached_property
    def twin(self):
        return build_catalog("hoggar-twin")

    @functools.cached_property
    def hesse(self):
        return build_catalog("hesse")

    @functools.cached_property
    def tetra(self):
        return build_catalog("tetrahedron")

    @functools.cached_property
    def dual(self):
        return build_catalog("tetrahedron-dual")

    @functools.cached_property
    def cls(self):
        return triples.classify(self.hoggar)

    @functools.cached_property
    def design(self):
        return designs.design_from_twin(self.hoggar, self.twin)

    @functools.cached_property
    def quartets(self):
        return compat.pph_quartets(self.design)

    @functools.cached_property
    def twin_reps(self):
        return [rep_of_vector(self.hoggar, self.twin.vectors[i]) for i in range(64)]


def _check(bundle: ReportBundle, section: str, name: str, expected, compute):
    t0 = time.perf_counter()
    computed = compute()
    bundle.add(section, name, computed == expected, expected, computed,
               time.perf_counter() - t0)


def _verify_sic(ctx: Context, seed: int) -> ReportBundle:
    bundle = ReportBundle()
    rng = random.Random(seed)

    def equiangularity():
        out = {}
        for label in LABELS:
            e = build_catalog(label)
            constant = e.pair_overlap(0, 1)
            ok = constant == Fraction(1, e.d + 1)
            ok = ok and all(
                e.pair_overlap(j, k) == Fraction(1, e.d + 1)
                for j, k in itertools.combinations(range(e.size), 2)
            )
            out[label] = constant.as_fraction() if ok else "violated"
        return out

    _check(bundle, "sic", "c01-equiangularity",
           {label: Fraction(1, build_catalog(label).d + 1) for label in LABELS},
           equiangularity)

    def qbic_128():
        ok = all(qbic_check_hoggar(sic_element_rep(ctx.hoggar, k), ctx.cls)
                 for k in range(64))
        ok = ok and all(qbic_check_hoggar(p, ctx.cls) for p in ctx.twin_reps)
        return ok

    _check(bundle, "sic", "c05-qbic-hoggar-and-twin-128-states", True, qbic_128)

    def qbic_twin_constants():
        cubes = {sum(x ** 3 for x in p.p) for p in ctx.twin_reps}
        brackets = {signed_pm_sum(p, ctx.cls) for p in ctx.twin_reps}
        return {"sum-cubes": sorted(cubes), "bracket": sorted(brackets)}

    _check(bundle, "sic", "c05-twin-cubic-terms",
           {"sum-cubes": [Fraction(1, 1296)], "bracket": [Fraction(7, 144)]},
           qbic_twin_constants)

    def qbic_agreement():
        for _ in range(50):
            v = ensembles.random_pure_vector(ctx.hoggar, rng)
            p = rep_of_vector(ctx.hoggar, v)
            if not (quadratic_check(p, 8)
                    and qbic_check_hoggar(p, ctx.cls)
                    and qbic_check_general(p, ctx.hoggar)):
                return False
        return True

    _check(bundle, "sic", "c05-simplified-vs-general-random50", True, qbic_agreement)

    def minimizers_d2():
        found = enumerate_min_entropy(ctx.tetra)
        want = {tuple(rep_of_vector(ctx.tetra, v).p) for v in ctx.dual.vectors}
        return {"count": len(found), "is-dual-tetrahedron":
                {tuple(p.p) for p in found} == want}

    _check(bundle, "sic", "c08-minimizers-d2",
           {"count": 4, "is-dual-tetrahedron": True}, minimizers_d2)

    def minimizers_d3():
        found = enumerate_min_entropy(ctx.hesse)
        if len(found) != 12:
            return {"count": len(found)}
        states = [reconstruct(p, ctx.hesse) for p in found]
        overlaps = {}
        for i, j in itertools.combinations(range(12), 2):
            overlaps[(i, j)] = state_overlap(states[i], states[j]).as_fraction()
        # orthogonality classes must be 4 bases of 3, mutually unbiased
        groups = []
        assigned = set()
        for i in range(12):
            if i in assigned:
                continue
            group = {i} | {j for j in range(12) if j != i
                           and overlaps[tuple(sorted((i, j)))] == 0}
            groups.append(group)
            assigned |= group
        sizes = sorted(len(g) for g in groups)
        cross = {overlaps[tuple(sorted((i, j)))]
                 for a, b in itertools.combinations(groups, 2)
                 for i in a for j in b}
        return {"count": 12, "basis-sizes": sizes, "cross-overlaps": sorted(cross)}

    _check(bundle, "sic", "c08-minimizers-d3-mub",
           {"count": 12, "basis-sizes": [3, 3, 3, 3],
            "cross-overlaps": [Fraction(1, 3)]},
           minimizers_d3)

    def minimizers_d8():
        passed = enumerate_min_entropy(ctx.hoggar, candidates=ctx.twin_reps)
        return len(passed)

    _check(bundle, "sic", "c08-minimizers-d8-twin-verification", 64, minimizers_d8)

    def zero_bound():
        zeros = {p.zeros() for p in ctx.twin_reps}
        ok = all(zero_count_bound(p, 8) for p in ctx.twin_reps)
        return {"zeros": sorted(zeros), "bound-holds": ok}

    _check(bundle, "sic", "c08-zero-count-bound-saturation",
           {"zeros": [28], "bound-holds": True}, zero_bound)
    return bundle


def _verify_triples(ctx: Context) -> ReportBundle:
    bundle = ReportBundle()
    cls = ctx.cls

    _check(bundle, "triples", "c02-class-sizes",
           {"S+": 16128, "S-": 4032, "S0": 21504},
           lambda: {"S+": len(cls.s_plus), "S-": len(cls.s_minus),
                    "S0": len(cls.s_zero)})

    def per_point():
        nm, np_ = triples.per_point_counts(cls)
        return {"N-": sorted(set(nm)), "N+": sorted(set(np_))}

    _check(bundle, "triples", "c02-per-point-counts",
           {"N-": [189], "N+": [756]}, per_point)

    def per_pair():
        nm, np_ = triples.per_pair_counts(cls)
        return {"N-": sorted(set(nm.values())), "N+": sorted(set(np_.values()))}

    _check(bundle, "triples", "c02-per-pair-counts",
           {"N-": [6], "N+": [24]}, per_pair)

    _check(bundle, "triples", "c03-cube-histogram",
           {Fraction(1, 9): 2, Fraction(1, 27): 24,
            Fraction(-1, 27): 6, Fraction(0): 32},
           lambda: triples.cube_c01(ctx.hoggar).histogram())

    _check(bundle, "triples", "c03-symplectic-vanishing", True,
           lambda: triples.vanishing_matches_symplectic(ctx.hoggar))

    _check(bundle, "triples", "c04-two-graph-axioms", True,
           lambda: triples.two_graph_check(cls.s_zero))

    seidel = triples.descendant_seidel(cls.s_zero, 0)
    seidel_exact = seidel.to_exact()

    _check(bundle, "triples", "c04-seidel-annihilates-(7,-9)", True,
           lambda: seidel_exact.annihilates([7, -9]))

    from .linalg import ExactMatrix
    eye = ExactMatrix.identity(64)

    _check(bundle, "triples", "c04-seidel-eigenvalue-multiplicities",
           {"rank(A+9I)": 36, "rank(A-7I)": 28},
           lambda: {"rank(A+9I)": (seidel_exact + eye.scale(9)).rank(),
                    "rank(A-7I)": (seidel_exact - eye.scale(7)).rank()})

    gram = triples.gram_from_seidel(seidel, Fraction(-9))

    _check(bundle, "triples", "c04-gram-rank-and-annihilator",
           {"rank": 36, "annihilates": True},
           lambda: {"rank": gram.rank(),
                    "annihilates": gram.annihilates([0, Fraction(16, 9)])})

    _check(bundle, "triples", "c10-clifford-factorization",
           2 ** 15 * 3 ** 4 * 5 * 7,
           lambda: grouparith.clifford_order(2, 3))

    def identities():
        rep = grouparith.order_identities(cls)
        return {"clifford": rep.clifford_order,
                "symmetry": rep.hoggar_symmetry_order,
                "stabilizer": rep.stabilizer_order}

    _check(bundle, "triples", "c10-order-identities",
           {"clifford": 92897280, "symmetry": 387072, "stabilizer": 6048},
           identities)
    return bundle


def _verify_designs(ctx: Context) -> ReportBundle:
    bundle = ReportBundle()
    design = ctx.design

    _check(bundle, "designs", "c06-twin-design-parameters",
           (64, 64, 36, 36, 20),
           lambda: designs.bibd_params(design).as_tuple())

    _check(bundle, "designs", "c06-complement-parameters",
           (64, 64, 28, 28, 12),
           lambda: designs.bibd_params(designs.complement(design)).as_tuple())

    _check(bundle, "designs", "c06-splus-sminus-bibd",
           {"S-": (64, 4032, 3, 189, 6), "S+": (64, 16128, 3, 756, 24)},
           lambda: {
               "S-": designs.bibd_params(
                   designs.design_from_triples(64, ctx.cls.s_minus)).as_tuple(),
               "S+": designs.bibd_params(
                   designs.design_from_triples(64, ctx.cls.s_plus)).as_tuple(),
           })

    _check(bundle, "designs", "c06-symmetric-difference-property", True,
           lambda: designs.sdp_check(design))

    _check(bundle, "designs", "c06-hadamard-row-multiset", True,
           lambda: sorted(designs.hadamard_construction(3)[1].words())
           == sorted(design.words()))

    def hyper():
        distinct, counts = designs.hyperplanes(design)
        return {"count": len(distinct),
                "weights": sorted({w.bit_count() for w in distinct}),
                "multiplicities": sorted(set(counts.values()))}

    _check(bundle, "designs", "c06-hyperplanes",
           {"count": 126, "weights": [32], "multiplicities": [16]}, hyper)

    def kantor():
        values = set()
        for i, j in itertools.combinations(range(64), 2):
            for k in range(64):
                if k not in (i, j):
                    values.add(designs.kantor_value(design, i, j, k))
        return sorted(values)

    _check(bundle, "designs", "c06-kantor-values", [16, 20], kantor)
    return bundle


def _verify_compat(ctx: Context) -> ReportBundle:
    bundle = ReportBundle()
    design = ctx.design

    table_quartet = (0, 1, 2, 3)  # calibrated: Table-style rows are blocks 0..3

    def quartet_pp():
        reps = [ctx.twin_reps[i] for i in table_quartet]
        full = compat.pp_incompatible(reps)
        scan = compat.pph_incompatible_by_scan(design, table_quartet)
        member = frozenset(table_quartet) in ctx.quartets
        return {"pp": full, "scan": scan, "enumerated": member}

    _check(bundle, "compat", "c07-table-quartet-incompatible",
           {"pp": True, "scan": True, "enumerated": True}, quartet_pp)

    def subsets_ok():
        for triple in itertools.combinations(table_quartet, 3):
            if compat.pp_incompatible([ctx.twin_reps[i] for i in triple]):
                return False
        return True

    _check(bundle, "compat", "c07-table-triples-compatible", True, subsets_ok)

    _check(bundle, "compat", "c07-quartet-s0-bridge", True,
           lambda: compat.quartet_triple_product_bridge(ctx.quartets, ctx.cls, design))

    def hesse_triple():
        reps = [
            ProbVector(3, tuple([Fraction(0)] * 3 + [Fraction(1, 6)] * 6)),
            ProbVector(3, tuple([Fraction(1, 6)] * 3 + [Fraction(0)] * 3
                                + [Fraction(1, 6)] * 3)),
            ProbVector(3, tuple([Fraction(1, 6)] * 6 + [Fraction(0)] * 3)),
        ]
        zeros = compat.column_zero_counts(reps)
        return {"pp": compat.pp_incompatible(reps),
                "zeros-per-column": sorted(set(zeros))}

    _check(bundle, "compat", "c07-hesse-triple-one-zero-per-column",
           {"pp": True, "zeros-per-column": [1]}, hesse_triple)

    # at d = 2 both inequalities fail (the first at the boundary 3/3 = 1)
    _check(bundle, "compat", "c07-triple-inequalities",
           {2: (False, False), 3: (True, True), 4: (True, True),
            5: (True, True), 6: (True, True), 7: (True, True), 8: (True, True)},
           lambda: {d: compat.sic_triple_inequalities(d) for d in range(2, 9)})
    return bundle


def _verify_geometry(ctx: Context) -> ReportBundle:
    bundle = ReportBundle()

    _check(bundle, "geometry", "c09-zeros-antiflags-antisymmetric-agree", True,
           lambda: finitegeo.zero_pattern_correspondence(ctx.design.blocks[0]))

    _check(bundle, "geometry", "c09-fano-counts",
           {"flags": 21, "antiflags": 28},
           lambda: dict(zip(("flags", "antiflags"), finitegeo.flag_counts())))

    def gosset():
        poly = finitegeo.gosset_polytope()
        return {"vertices": len(poly.vertices), "lines": len(poly.lines),
                "cos2": finitegeo.gosset_line_cosine_squared(poly)}

    _check(bundle, "geometry", "c09-gosset-lines",
           {"vertices": 56, "lines": 28, "cos2": Fraction(1, 9)}, gosset)
    return bundle


_SECTIONS = {
    "sic": lambda ctx, seed: _verify_sic(ctx, seed),
    "triples": lambda ctx, seed: _verify_triples(ctx),
    "designs": lambda ctx, seed: _verify_designs(ctx),
    "compat": lambda ctx, seed: _verify_compat(ctx),
    "geometry": lambda ctx, seed: _verify_geometry(ctx),
}


def cmd_catalog(args) -> int:
    for label in LABELS:
        e = build_catalog(label)
        print(f"{label}: d={e.d}, conductor={e.conductor}, "
              f"{len(e.projectors)} projectors, "
              f"equiangularity constant 1/{e.d + 1}")
    return 0


def cmd_verify(args) -> int:
    targets = SECTION_ORDER if args.target == "all" else (args.target,)
    ctx = Context()
    # shared inputs, built once before any fan-out
    if {"sic", "triples", "designs", "compat"} & set(targets):
        ctx.cls
    if {"sic", "designs", "compat", "geometry"} & set(targets):
        ctx.design

    bundle = ReportBundle()
    if args.jobs > 1 and len(targets) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = {t: pool.submit(_SECTIONS[t], ctx, args.seed) for t in targets}
            results = {t: f.result() for t, f in futures.items()}
    else:
        results = {t: _SECTIONS[t](ctx, args.seed) for t in targets}
    for t in targets:
        bundle.merge(results[t])

    print(bundle.render_text())
    if args.json:
        bundle.write_json(args.json)
        print(f"wrote {args.json}")
    if args.csv:
        _write_csv_exports(ctx, targets, args.csv)
        print(f"wrote CSV exports to {args.csv}")
    return 0 if bundle.all_passed() else 1


def _write_csv_exports(ctx: Context, targets, out_dir: str):
    os.makedirs(out_dir, exist_ok=True)
    if "triples" in targets:
        _export_classification(ctx, os.path.join(out_dir, "classification.csv"))
        _export_gram(ctx, os.path.join(out_dir, "gram.csv"))
    if "designs" in targets:
        with open(os.path.join(out_dir, "design-params.csv"), "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["design", "v", "b", "k", "r", "lambda"])
            writer.writerow(["twin"] + list(designs.bibd_params(ctx.design).as_tuple()))
            writer.writerow(["complement"]
                            + list(designs.bibd_params(
                                designs.complement(ctx.design)).as_tuple()))


def _export_classification(ctx: Context, path: str):
    cls = ctx.cls
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["j", "k", "l", "value"])
        for t in itertools.combinations(range(64), 3):
            if t in cls.s_plus:
                value = "1/27"
            elif t in cls.s_minus:
                value = "-1/27"
            else:
                value = "0"
            writer.writerow([*t, value])


def _export_gram(ctx: Context, path: str):
    seidel = triples.descendant_seidel(ctx.cls.s_zero, 0)
    gram = triples.gram_from_seidel(seidel, Fraction(-9))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for i in range(64):
            writer.writerow([fmt(e.as_fraction()) for e in gram.row(i)])


def cmd_export(args) -> int:
    ctx = Context()
    what, path = args.what, args.path
    if what == "blocks":
        with open(path, "w") as fh:
            for block in ctx.design.blocks:
                fh.write(block.bits() + "\n")
    elif what == "cube":
        with open(path, "w") as fh:
            fh.write(triples.cube_c01(ctx.hoggar).render_text())
            fh.write("\n")
    elif what == "classification":
        _export_classification(ctx, path)
    elif what == "gram":
        _export_gram(ctx, path)
    elif what == "fano":
        table = finitegeo.incidence_table()
        antiflags = []
        for p in finitegeo.fano_points():
            for l in finitegeo.fano_lines():
                if not finitegeo.fano_incident(p, l):
                    antiflags.append({"point": list(p.coords), "line": list(l.coords)})
        payload = {
            "incidence": {"".join(map(str, k)): ["".join(map(str, p)) for p in v]
                          for k, v in table.items()},
            "antiflags": antiflags,
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    elif what == "gosset":
        poly = finitegeo.gosset_polytope()
        cos2 = finitegeo.gosset_line_cosine_squared(poly)
        payload = {
            "vertices": [list(v.v) for v in poly.vertices],
            "lines": [list(l) for l in poly.lines],
            "cosine-squared": fmt(cos2),
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError(f"unknown export {what!r}")
    print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtsic",
        description="Exact construction and verification of the "
                    "doubly-transitive SIC ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the available ensembles")

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument("target", choices=SECTION_ORDER + ("all",))
    verify.add_argument("--json", metavar="PATH", help="write the report as JSON")
    verify.add_argument("--csv", metavar="DIR", help="write CSV exports")
    verify.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="fan independent sections out to N workers")
    verify.add_argument("--seed", type=int, default=2025,
                        help="PRNG seed for the randomised property checks")

    export = sub.add_parser("export", help="write one artifact")
    export.add_argument("what", choices=("cube", "blocks", "classification",
                                         "gram", "fano", "gosset"))
    export.add_argument("path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "catalog":
        return cmd_catalog(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "export":
        return cmd_export(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
