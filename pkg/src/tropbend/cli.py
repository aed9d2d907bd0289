"""Command-line front end.

Each command reads a problem file, runs the corresponding pipeline, and
emits a report: human-readable text by default, a machine-readable JSON
document (schema 1) with --json.  Exit codes: 0 success, 2 parse error,
3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .bend import bend_relations, tropically_vanishes, univariate_canonical_form
from .curves import balanced_at_vertices, plane_curve_facets
from .errors import ProblemParseError, RecoveryError, ResourceExhausted
from .polynomials import TropPoly, monomials_of_degree, tropicalize_poly
from .problemfile import ProblemFile, homogenize, parse_point, parse_problem
from .semiring import TropicalValue
from .tropicalize import (
    PipelineOptions,
    kp_set_agreement,
    tropical_basis_check,
    tropical_hilbert,
    tropicalize_ideal,
    tropicalize_point,
)

COMMANDS = (
    "tropicalize",
    "hilbert",
    "basis-check",
    "facets",
    "bend",
    "roots",
    "eval",
    "point-trop",
    "kp-check",
)


def _verdict_str(v: Optional[bool]) -> str:
    return "yes" if v is True else "no" if v is False else "unknown"


def _trop_poly_json(f: TropPoly, names: Sequence[str]) -> Dict:
    return {
        "text": f.to_str(names),
        "terms": [
            {"monomial": list(m), "coeff": str(f.terms[m])} for m in f.support()
        ],
    }


def _pair_json(pair, basis, nvars, names) -> List[Dict]:
    return [
        _trop_poly_json(TropPoly.from_vector(side, basis, nvars), names) for side in pair
    ]


def _grid_from_spec(spec: str, nvars: int) -> List[Tuple[TropicalValue, ...]]:
    from itertools import product

    lo_text, hi_text = spec.split(":", 1)
    lo, hi = int(lo_text), int(hi_text)
    if hi < lo:
        raise ValueError("empty grid range")
    vals = [TropicalValue(k) for k in range(lo, hi + 1)]
    return [tuple(p) for p in product(vals, repeat=nvars)]


def _pipeline_options(args) -> PipelineOptions:
    opts = PipelineOptions()
    if args.max_chain is not None:
        opts.max_chain = args.max_chain
    if args.circuit_budget is not None:
        opts.circuit_budget = args.circuit_budget
    if args.mz_max_generators is not None:
        opts.mz_max_generators = args.mz_max_generators
    return opts


def _resolve_max_degree(args, problem: ProblemFile) -> Optional[int]:
    if args.max_degree is not None:
        return args.max_degree
    if "max_degree" in problem.options:
        return int(problem.options["max_degree"])
    return None


def _resolve_grid(args, problem: ProblemFile, nvars: int):
    spec = args.grid or problem.options.get("grid")
    if spec is None:
        return None
    return _grid_from_spec(spec, nvars)


def run(command: str, path: str, args) -> Tuple[int, Dict]:
    with open(path, "r", encoding="utf-8") as handle:
        problem = parse_problem(handle.read())
    if args.max_chain is None and "max_chain" in problem.options:
        args.max_chain = int(problem.options["max_chain"])
    report: Dict = {
        "schema": 1,
        "command": command,
        "input": {
            "field": problem.field_name,
            "valuation": problem.valuation.name,
            "vars": problem.var_names,
            "gens": problem.gen_texts,
            "options": problem.options,
        },
    }
    v = problem.valuation
    opts = _pipeline_options(args)

    if command == "tropicalize":
        gens, names, changed = homogenize(problem)
        report["input"]["homogenized"] = changed
        T = tropicalize_ideal(v, gens, _resolve_max_degree(args, problem), nvars=len(names), options=opts)
        degrees = []
        for d in range(T.max_degree + 1):
            space = T.trop_space(d)
            cong = T.bend_congruence(d)
            dual = T.dual_space(d)
            degrees.append(
                {
                    "degree": d,
                    "ambient_dim": space.ambient_size,
                    "rank": space.rank,
                    "generators": [
                        _trop_poly_json(g, names) for g in T.trop_space_polys(d)
                    ],
                    "bend_pairs": len(cong.pairs),
                    "dual_rank": dual.rank,
                }
            )
        report["result"] = {"max_degree": T.max_degree, "per_degree": degrees}

    elif command == "hilbert":
        gens, names, changed = homogenize(problem)
        report["input"]["homogenized"] = changed
        T = tropicalize_ideal(v, gens, _resolve_max_degree(args, problem), nvars=len(names), options=opts)
        table = []
        for d in range(T.max_degree + 1):
            table.append(
                {
                    "degree": d,
                    "tropical": tropical_hilbert(T, d),
                    "classical": T.classical_hilbert(d),
                }
            )
        report["result"] = {
            "table": table,
            "agrees": all(row["tropical"] == row["classical"] for row in table),
        }

    elif command == "basis-check":
        gens, names, changed = homogenize(problem)
        report["input"]["homogenized"] = changed
        grid = _resolve_grid(args, problem, len(names))
        check = tropical_basis_check(
            v, gens, _resolve_max_degree(args, problem), options=opts, grid=grid
        )
        rows = []
        for row in check.degrees:
            basis = tuple(monomials_of_degree(len(names), row.degree))
            entry = {
                "degree": row.degree,
                "scheme_theoretic_basis": _verdict_str(row.basis_verdict),
                "bend_generation": _verdict_str(row.bend_generation_verdict),
                "set_agreement": row.set_agreement,
            }
            if row.basis_witness is not None:
                entry["witness"] = _pair_json(row.basis_witness, basis, len(names), names)
            if row.bend_generation_witness is not None:
                entry["bend_generation_witness"] = _pair_json(
                    row.bend_generation_witness, basis, len(names), names
                )
            rows.append(entry)
        summary = {k: _verdict_str(val) if not isinstance(val, bool) else val for k, val in check.overall().items()}
        report["result"] = {"per_degree": rows, "overall": summary}

    elif command == "facets":
        if len(problem.gens) != 1:
            raise ProblemParseError("facets needs exactly one generator", 1, 1)
        curve = plane_curve_facets(v, problem.gens[0])
        report["result"] = {
            "vertices": [[str(c) for c in vert] for vert in curve.vertices],
            "facets": [
                {
                    "kind": f.kind,
                    "direction": list(f.direction),
                    "multiplicity": f.multiplicity,
                    "dual_edge": [list(f.dual_edge[0]), list(f.dual_edge[1])],
                    "anchor": [str(c) for c in f.anchor],
                    **({"endpoint": [str(c) for c in f.endpoint]} if f.endpoint else {}),
                }
                for f in curve.facets
            ],
            "balanced": balanced_at_vertices(curve),
        }

    elif command == "bend":
        out = []
        for g in problem.gens:
            tg = tropicalize_poly(v, g)
            if not tg:
                out.append({"poly": _trop_poly_json(tg, problem.var_names), "pairs": []})
                continue
            rels = bend_relations(tg)
            out.append(
                {
                    "poly": _trop_poly_json(tg, problem.var_names),
                    "pairs": [
                        [_trop_poly_json(lhs, problem.var_names), _trop_poly_json(rhs, problem.var_names)]
                        for lhs, rhs in rels.pairs
                    ],
                }
            )
        report["result"] = {"bend_relations": out}

    elif command == "roots":
        if len(problem.var_names) != 1:
            raise ProblemParseError("roots needs a univariate problem", 1, 1)
        out = []
        for g in problem.gens:
            tg = tropicalize_poly(v, g)
            form = univariate_canonical_form(tg)
            out.append(
                {
                    "poly": _trop_poly_json(tg, problem.var_names),
                    "scalar": str(form.scalar),
                    "roots": [str(r) for r in form.roots],
                }
            )
        report["result"] = {"canonical_forms": out}

    elif command == "eval":
        spec = args.point or problem.options.get("point")
        points: List[Tuple[TropicalValue, ...]] = []
        if spec:
            points = [tuple(TropicalValue(c.strip()) for c in spec.split(","))]
        else:
            grid = _resolve_grid(args, problem, len(problem.var_names))
            if grid is None:
                raise ProblemParseError("eval needs a point: option or --grid", 1, 1)
            points = grid
        out = []
        for q in points:
            row = {
                "point": [str(c) for c in q],
                "values": [],
                "vanishes": [],
            }
            for g in problem.gens:
                tg = tropicalize_poly(v, g)
                row["values"].append(str(tg(q)))
                row["vanishes"].append(tropically_vanishes(tg, q))
            out.append(row)
        report["result"] = {"evaluations": out}

    elif command == "point-trop":
        spec = args.point or problem.options.get("point")
        if not spec:
            raise ProblemParseError("point-trop needs a point: option or --point", 1, 1)
        coords = parse_point(spec, problem.field)
        values = tropicalize_point(v, coords)
        report["result"] = {
            "relations": [
                {"var": name, "value": str(val)}
                for name, val in zip(problem.var_names, values)
            ]
        }

    elif command == "kp-check":
        gens, names, changed = homogenize(problem)
        report["input"]["homogenized"] = changed
        grid = _resolve_grid(args, problem, len(problem.var_names))
        if grid is None:
            grid = _grid_from_spec("-3:3", len(problem.var_names))
        if changed or len(names) > len(problem.var_names):
            one = TropicalValue(0)
            grid = [q + (one,) for q in grid]
        agrees = kp_set_agreement(
            v, gens, grid, _resolve_max_degree(args, problem), nvars=len(names), options=opts
        )
        report["result"] = {"agrees": agrees, "grid_points": len(grid)}

    else:
        raise ValueError(f"unknown command {command!r}")

    return 0, report


def _print_human(report: Dict):
    command = report["command"]
    result = report.get("result", {})
    print(f"{command}: field {report['input']['field']}, valuation {report['input']['valuation']}")
    if command == "hilbert":
        print("  d  tropical  classical")
        for row in result["table"]:
            print(f"  {row['degree']:<3}{row['tropical']:<10}{row['classical']}")
        print(f"  agreement: {result['agrees']}")
    elif command == "basis-check":
        for row in result["per_degree"]:
            line = (
                f"  degree {row['degree']}: basis {row['scheme_theoretic_basis']}, "
                f"bend-generation {row['bend_generation']}, set-agreement {row['set_agreement']}"
            )
            if "witness" in row:
                line += f", witness {row['witness'][0]['text']} ~ {row['witness'][1]['text']}"
            print(line)
        print(f"  overall: {result['overall']}")
    elif command == "facets":
        for f in result["facets"]:
            print(
                f"  {f['kind']}: direction {tuple(f['direction'])} multiplicity {f['multiplicity']}"
                f" dual edge {f['dual_edge']}"
            )
        print(f"  vertices: {result['vertices']}")
        print(f"  balanced: {result['balanced']}")
    elif command == "roots":
        for entry in result["canonical_forms"]:
            print(f"  {entry['poly']['text']}: scalar {entry['scalar']}, roots {entry['roots']}")
    elif command == "point-trop":
        for rel in result["relations"]:
            print(f"  {rel['var']} ~ {rel['value']}")
    elif command == "kp-check":
        print(f"  agrees on {result['grid_points']} grid points: {result['agrees']}")
    elif command == "tropicalize":
        for row in result["per_degree"]:
            print(
                f"  degree {row['degree']}: rank {row['rank']}, dual rank {row['dual_rank']},"
                f" {len(row['generators'])} generators, {row['bend_pairs']} bend pairs"
            )
    elif command == "eval":
        for row in result["evaluations"]:
            print(f"  point ({', '.join(row['point'])}): values {row['values']} vanishes {row['vanishes']}")
    elif command == "bend":
        for entry in result["bend_relations"]:
            print(f"  {entry['poly']['text']}: {len(entry['pairs'])} relations")


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="tropbend",
        description="Scheme-theoretic tropicalization toolkit (exact arithmetic)",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", help="problem file")
    parser.add_argument("--max-degree", type=int, default=None)
    parser.add_argument("--max-chain", type=int, default=None)
    parser.add_argument("--circuit-budget", type=int, default=None)
    parser.add_argument("--mz-max-generators", type=int, default=None)
    parser.add_argument("--grid", default=None, help="a:b integer grid bounds")
    parser.add_argument("--point", default=None, help="comma-separated coordinates")
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    args = parser.parse_args(argv)

    try:
        code, report = run(args.command, args.file, args)
    except ProblemParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceExhausted as exc:
        print(f"resource exhausted: {exc}", file=sys.stderr)
        return 3
    except RecoveryError as exc:
        print(f"recovery failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_human(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
