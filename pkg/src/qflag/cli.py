"""Command-line interface: degree lifts, invariants, products, structure
tables and self-check suites.

Exit codes: 0 success, 1 internal assertion or failed check, 2 input
validation, 3 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import cache as cache_io
from .compare import (
    check_comparison_consistency,
    classical_parabolic_invariant,
    comparison_data,
    parabolic_gw_invariant,
    parabolic_quantum_product,
)
from .degrees import enumerate_alcove_lifts, is_effective, peterson_lift
from .quantum import (
    BOREL,
    QClass,
    format_qclass,
    gw_invariant,
    quantum_product,
    star,
)
from .root_system import CartanType, ParabolicSubset, build_root_system
from .weyl import (
    EnumerationBoundError,
    enumerate_min_reps,
    format_word,
    from_word,
    min_coset_rep,
    parse_word,
)


def _context(args):
    ctype = CartanType.parse(args.type)
    rs = build_root_system(ctype)
    parabolic = ParabolicSubset.parse(getattr(args, "parabolic", "") or "")
    rs.check_parabolic(parabolic)
    return rs, parabolic


def _parse_degree(text, expected):
    text = (text or "").strip()
    if not text:
        raise ValueError("missing degree vector")
    try:
        degree = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse degree {text!r}") from None
    if len(degree) != expected:
        raise ValueError(
            f"degree has {len(degree)} coordinates, expected {expected} "
            "(one per node outside the parabolic)"
        )
    return degree


def _parse_classes(rs, text):
    words = [part.strip() for part in (text or "").split(",")]
    if words == [""]:
        raise ValueError("missing class list")
    elements = []
    for wtext in words:
        word = parse_word(wtext)
        for i in word:
            if not 1 <= i <= rs.rank:
                raise ValueError(f"generator s{i} out of range for {rs.cartan_type}")
        elements.append(from_word(rs, word))
    return elements


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _normalize_classes(rs, parabolic, elements):
    """Minimal representatives plus warnings for inputs that were not."""
    normalized, warnings = [], []
    for w in elements:
        rep = min_coset_rep(w, parabolic)
        if rep != w:
            warnings.append(
                f"class {format_word(w.word)} is not a minimal representative; "
                f"using {format_word(rep.word)}"
            )
        normalized.append(rep)
    return normalized, warnings


def _term_dicts(qc: QClass):
    return [
        {"w": format_word(w.word), "q": list(d), "c": c}
        for (w, d), c in qc.sorted_terms()
    ]


def cmd_lift(args):
    rs, parabolic = _context(args)
    degree = _parse_degree(args.degree, len(parabolic.free_nodes(rs.rank)))
    if not is_effective(rs, parabolic, degree):
        raise ValueError(f"degree {list(degree)} is not effective")
    cd = comparison_data(rs, parabolic, degree)
    payload = {
        "type": str(rs.cartan_type),
        "parabolic": list(parabolic.indices),
        "degree": list(degree),
        "lambdaB": list(cd.d_B.lam),
        "dB": list(cd.d_B.lam),
        "Pprime": list(cd.j_prime.indices),
        "wPrime": format_word(cd.w_prime.word),
        "dPprime": list(cd.d_pprime),
    }
    _emit(
        args,
        payload,
        [
            f"type: {payload['type']}  parabolic: {payload['parabolic']}  degree: {payload['degree']}",
            f"lambda_B: {payload['lambdaB']}",
            f"d_B: {payload['dB']}",
            f"P_prime: {payload['Pprime']}",
            f"w_prime: {payload['wPrime']}",
            f"d_Pprime: {payload['dPprime']}",
        ],
    )
    return 0


def cmd_gw(args):
    rs, parabolic = _context(args)
    elements = _parse_classes(rs, args.classes)
    if len(elements) < 3:
        raise ValueError("need at least three classes")
    degree = _parse_degree(args.degree, len(parabolic.free_nodes(rs.rank)))
    warnings = []
    note = None
    if len(parabolic):
        elements, warnings = _normalize_classes(rs, parabolic, elements)
        if is_effective(rs, parabolic, degree):
            value = parabolic_gw_invariant(rs, parabolic, elements, degree)
            d_b = list(comparison_data(rs, parabolic, degree).d_B.lam)
        else:
            value, d_b, note = 0, None, "non-effective degree"
        route = "comparison"
    else:
        route = "borel"
        if all(x >= 0 for x in degree):
            value = gw_invariant(rs, elements, degree)
            d_b = list(degree)
        else:
            value, d_b, note = 0, None, "non-effective degree"
    payload = {
        "type": str(rs.cartan_type),
        "parabolic": list(parabolic.indices),
        "classes": [format_word(w.word) for w in elements],
        "degree": list(degree),
        "invariant": value,
        "dB": d_b,
        "route": route,
    }
    if note:
        payload["note"] = note
    if warnings:
        payload["warnings"] = warnings
    lines = [f"invariant: {value}"]
    lines.append(f"route: {route}  dB: {d_b}")
    if note:
        lines.append(f"note: {note}")
    lines.extend(f"note: {w}" for w in warnings)
    _emit(args, payload, lines)
    return 0


def cmd_mul(args):
    rs, parabolic = _context(args)
    u = _parse_classes(rs, args.u)[0]
    v = _parse_classes(rs, args.v)[0]
    warnings = []
    if len(parabolic):
        (u, v), warnings = _normalize_classes(rs, parabolic, [u, v])
        qc = parabolic_quantum_product(rs, parabolic, u, v)
    else:
        qc = quantum_product(rs, u, v)
    payload = {
        "type": str(rs.cartan_type),
        "parabolic": list(parabolic.indices),
        "u": format_word(u.word),
        "v": format_word(v.word),
        "product": format_qclass(qc),
        "terms": _term_dicts(qc),
    }
    if warnings:
        payload["warnings"] = warnings
    lines = [f"{payload['u']} * {payload['v']} = {payload['product']}"]
    lines.extend(f"note: {w}" for w in warnings)
    _emit(args, payload, lines)
    return 0


def cmd_table(args):
    rs, parabolic = _context(args)
    basis = enumerate_min_reps(rs, parabolic)
    cache_dir = args.cache_dir or cache_io.default_cache_dir()
    path = cache_io.table_path(cache_dir, str(rs.cartan_type), parabolic)
    entries, problem = cache_io.load_document(path, str(rs.cartan_type), parabolic)
    if problem:
        print(f"warning: {problem}", file=sys.stderr)
    if entries is not None and not _table_matches_basis(entries, basis):
        print(f"warning: ignoring cache {path}: basis mismatch", file=sys.stderr)
        entries = None
    if entries is not None:
        print(f"cache hit: {path}", file=sys.stderr)
    else:
        entries = []
        for u in basis:
            for v in basis:
                if len(parabolic):
                    qc = parabolic_quantum_product(rs, parabolic, u, v)
                else:
                    qc = quantum_product(rs, u, v)
                entries.append(
                    {
                        "u": format_word(u.word),
                        "v": format_word(v.word),
                        "terms": _term_dicts(qc),
                    }
                )
        cache_io.store_document(
            path, cache_io.make_document(str(rs.cartan_type), parabolic, entries)
        )
        print(f"cache write: {path}", file=sys.stderr)
    doc = cache_io.make_document(str(rs.cartan_type), parabolic, entries)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(
            f"type: {doc['type']}  parabolic: {doc['parabolic']}  "
            f"basis: {len(basis)}  entries: {len(entries)}"
        )
        for entry in entries:
            rendered = _render_terms(entry["terms"])
            print(f"sigma[{entry['u']}] * sigma[{entry['v']}] = {rendered}")
    return 0


def _render_terms(term_dicts):
    if not term_dicts:
        return "0"
    bits = []
    for term in term_dicts:
        parts = []
        if term["c"] != 1:
            parts.append(str(term["c"]))
        qpart = "*".join(
            f"q{t + 1}" if e == 1 else f"q{t + 1}^{e}"
            for t, e in enumerate(term["q"])
            if e
        )
        if qpart:
            parts.append(qpart)
        if term["w"] != "e" or not parts:
            parts.append(f"sigma[{term['w']}]")
        bits.append(" * ".join(parts))
    return " + ".join(bits)


def _table_matches_basis(entries, basis):
    words = [format_word(w.word) for w in basis]
    if len(entries) != len(words) ** 2:
        return False
    expected = [(u, v) for u in words for v in words]
    return [(e["u"], e["v"]) for e in entries] == expected


def _suite_associativity(args):
    rs, _ = _context(args)
    elements = enumerate_min_reps(rs, BOREL)
    order = len(elements)
    if order**3 <= 1000:
        triples = [(a, b, c) for a in elements for b in elements for c in elements]
        how = f"all {len(triples)} triples"
    else:
        rng = random.Random(0)
        count = args.samples or 200
        triples = [
            tuple(elements[rng.randrange(order)] for _ in range(3))
            for _ in range(count)
        ]
        how = f"{count} seeded random triples"
    bad_assoc = 0
    bad_comm = 0
    for a, b, c in triples:
        left = star(quantum_product(rs, a, b), QClass.unit(rs, BOREL, c))
        right = star(QClass.unit(rs, BOREL, a), quantum_product(rs, b, c))
        if left != right:
            bad_assoc += 1
        if quantum_product(rs, a, b) != quantum_product(rs, b, a):
            bad_comm += 1
    return [
        {"name": "associativity", "passed": bad_assoc == 0, "detail": how},
        {"name": "commutativity", "passed": bad_comm == 0, "detail": how},
    ]


def _effective_degrees(rs, parabolic, max_degree):
    from itertools import product as iter_product

    r = len(parabolic.free_nodes(rs.rank))
    return list(iter_product(range(max_degree + 1), repeat=r))


def _suite_comparison(args):
    rs, parabolic = _context(args)
    results = []
    for degree in _effective_degrees(rs, parabolic, args.max_degree):
        report = check_comparison_consistency(rs, parabolic, degree)
        for entry in report.as_dicts():
            entry = dict(entry)
            entry["name"] = f"d={list(degree)}: {entry['name']}"
            results.append(entry)
    return results


def _suite_lift_oracle(args):
    rs, parabolic = _context(args)
    results = []
    for degree in _effective_degrees(rs, parabolic, args.max_degree):
        hits = enumerate_alcove_lifts(rs, parabolic, degree, window=args.window)
        lam = peterson_lift(rs, parabolic, degree).lam
        passed = hits == [lam]
        results.append(
            {
                "name": f"d={list(degree)}: lift-uniqueness",
                "passed": passed,
                "detail": f"{len(hits)} lattice points in window {args.window}",
            }
        )
    return results


_SUITES = {
    "associativity": _suite_associativity,
    "comparison": _suite_comparison,
    "lift-oracle": _suite_lift_oracle,
}


def cmd_check(args):
    if args.suite not in _SUITES:
        raise ValueError(f"unknown suite {args.suite!r}; choose from {sorted(_SUITES)}")
    results = _SUITES[args.suite](args)
    ok = all(r["passed"] for r in results)
    payload = {"suite": args.suite, "passed": ok, "checks": results}
    lines = [
        f"{'PASS' if r['passed'] else 'FAIL'} {r['name']} ({r['detail']})"
        for r in results
    ]
    lines.append(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
    _emit(args, payload, lines)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qflag",
        description=(
            "Exact small quantum cohomology of flag varieties in the Schubert "
            "basis. Nodes use the standard Bourbaki numbering; Weyl words are "
            "'e' or concatenated generators like 's1s2s1'."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parabolic=True):
        p.add_argument("--type", required=True, help="Cartan type, e.g. A2")
        if parabolic:
            p.add_argument(
                "--parabolic",
                default="",
                help="comma list of parabolic nodes (empty = Borel)",
            )
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("lift", help="lift a degree to the Borel level")
    common(p)
    p.add_argument("--degree", required=True, help="comma list of integers")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("gw", help="Gromov-Witten invariant")
    common(p)
    p.add_argument("--classes", required=True, help="comma list of >= 3 Weyl words")
    p.add_argument("--degree", required=True, help="comma list of integers")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("mul", help="quantum product of two Schubert classes")
    common(p)
    p.add_argument("--u", required=True, help="first class (Weyl word)")
    p.add_argument("--v", required=True, help="second class (Weyl word)")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("table", help="full structure-constant table with caching")
    common(p)
    p.add_argument("--cache-dir", default=None, help="cache directory (default: QFLAG_CACHE_DIR or .qflag-cache)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="run a self-check suite")
    common(p)
    p.add_argument("--suite", required=True, help="|".join(sorted(_SUITES)))
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--window", type=int, default=6)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # internal assertion
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
