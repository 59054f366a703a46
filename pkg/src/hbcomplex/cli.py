"""Command-line front end.

Subcommands:

    surface-info                 counts and edge table of the model surface
    curve classify|intersect|twist|word
                                 curve queries (specs: reference label,
                                 raw coordinate JSON, or word@seed twist
                                 expression such as a1^2@b1)
    verify all|dims|links|cone|star|projection|involution|r5
                                 verification campaigns; exit 0 iff all
                                 verdicts pass
    metric dist|delta|ball       metric queries on a graph file
    pool gen                     generate a curve pool file
    complex build                build a complex graph from a pool file

Exit codes: 0 all checks passed, 1 a mathematical verdict failed,
2 usage or input error.  No other codes are used.

Every report is canonical JSON embedding the tool version and the full
run configuration; identical configurations produce byte-identical
reports (all "work" figures are deterministic counters, never wall
clock).  Genus is capped at 5 by default (clique search and pants
enumeration scale steeply); --uncap-genus lifts the cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .complexes import (ANNULUS, DISK, PANTS, ComplexGraph,
                        annulus_vertex, classify_curve_vertex,
                        cone_vertex_check, link_in_pool, max_clique,
                        star_property_check, verify_max_simplex,
                        verify_meridian_link)
from .curves import CurveClass, curve_from_coords
from .pools import (EdgeGraph, apply_twist_word, bfs_distance, build_graph,
                    cobounded_check, connected_components, delta_estimate,
                    generate_pool, involution_check, project_path,
                    r5_witness, subgraph)
from .refcurves import (meridian_system, pants_decomposition,
                        reference_curve, twin_pants_triple)
from .serialize import (curve_to_obj, dumps, graph_from_obj, graph_to_dot,
                        load_path, pool_from_obj, to_jsonable, word_to_obj)
from .surface import build_surface

GENUS_CAP = 5


class UsageError(Exception):
    pass


class VerdictError(Exception):
    pass


# ----------------------------------------------------------------------
# curve specs


def _parse_word(text):
    word = []
    for factor in text.split("."):
        factor = factor.strip()
        if not factor:
            raise UsageError("empty twist factor in %r" % text)
        if "^" in factor:
            label, power = factor.split("^", 1)
            try:
                power = int(power)
            except ValueError:
                raise UsageError("bad twist power in %r" % factor)
        else:
            label, power = factor, 1
        word.append((label.strip(), power))
    return tuple(word)


def parse_curve_spec(genus: int, spec: str) -> CurveClass:
    """Resolve a curve spec: JSON coords, word@seed, or reference label."""
    spec = spec.strip()
    try:
        if spec.startswith("{"):
            obj = json.loads(spec)
            g = int(obj.get("genus", genus))
            if g != genus:
                raise UsageError("curve genus %d does not match --genus %d"
                                 % (g, genus))
            return curve_from_coords(g, [int(x) for x in obj["coords"]])
        if "@" in spec:
            word_text, seed = spec.split("@", 1)
            seedc = reference_curve(genus, seed.strip())
            return apply_twist_word(_parse_word(word_text), seedc)
        return reference_curve(genus, spec)
    except UsageError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError("bad curve spec %r: %s" % (spec, exc))


def _check_genus(args):
    g = args.genus
    if g is None:
        raise UsageError("--genus is required")
    if g < 2:
        raise UsageError("genus must be at least 2")
    if g > GENUS_CAP and not getattr(args, "uncap_genus", False):
        raise UsageError("genus %d beyond the default cap %d "
                         "(pass --uncap-genus to proceed)" % (g, GENUS_CAP))
    return g


# ----------------------------------------------------------------------
# output plumbing


def _config_echo(args):
    # --out is deliberately not echoed: where a report is written is not
    # part of the run configuration, and identical runs must produce
    # byte-identical reports wherever they land.
    keys = ("command", "genus", "seed", "max_word_len", "weight_cap",
            "samples", "format", "include_pants", "about", "power",
            "graph", "pool", "u", "v", "center", "radius", "uncap_genus")
    config = {}
    for k in keys:
        if hasattr(args, k):
            config[k] = getattr(args, k)
    return config


def _emit(args, report, text_lines=None, dot_text=None):
    payload = {
        "version": __version__,
        "config": to_jsonable(_config_echo(args)),
        "report": to_jsonable(report),
    }
    fmt = getattr(args, "format", "json")
    if fmt == "dot":
        if dot_text is None:
            raise UsageError("this command has no DOT form")
        out = dot_text
    elif fmt == "text":
        lines = text_lines if text_lines is not None else [
            json.dumps(payload["report"], sort_keys=True)]
        out = "\n".join(lines) + "\n"
    else:
        out = dumps(payload)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# ----------------------------------------------------------------------
# default pools for verification campaigns


def _default_pool(genus, args, big=False):
    # chain curves supply crossing-rich orbits; the standard pants
    # decomposition supplies disjoint triples (hence pants vertices)
    chain_labels = ["c%d" % k for k in range(1, 2 * genus + 2)]
    decomp_labels = (["a%d" % i for i in range(1, genus + 1)]
                     + ["n%d" % i for i in range(1, genus)]
                     + ["m%d" % i for i in range(1, genus - 1)])
    max_len = args.max_word_len
    if max_len is None:
        # pants enumeration is cubic in pool size; stay modest above g=2
        if genus == 2:
            max_len = 3 if big else 2
        else:
            max_len = 1
    cap = args.weight_cap if args.weight_cap is not None else 60
    return generate_pool(genus, chain_labels + decomp_labels, chain_labels,
                         max_len, cap, prng_seed=args.seed)


# ----------------------------------------------------------------------
# verification campaigns


def _verify_dims(genus, args):
    curves = (list(twin_pants_triple()) if genus == 2
              else pants_decomposition(genus))
    rep = verify_max_simplex(genus, curves)
    expected = 5 * genus - 5
    ok = rep.verdict and rep.n_vertices == expected
    return {"check": "dims", "genus": genus, "expected_vertices": expected,
            "simplex": rep, "verdict": ok}


def _verify_links(genus, args):
    if genus < 3:
        raise UsageError("the meridian-link data needs genus >= 3")
    rep = verify_meridian_link(genus, meridian_system(genus))
    rep["check"] = "links"
    return rep


def _verify_cone(genus, args):
    pool = _default_pool(genus, args)
    graph = build_graph(pool, include_pants=True)
    pants = [v for v in graph.vertices if v.kind == PANTS]
    want = args.samples if args.samples is not None else 20
    sample = pants[:want]
    results = [cone_vertex_check(p, graph.vertices) for p in sample]
    return {"check": "cone", "genus": genus, "pool_size": len(pool),
            "n_pants_checked": len(sample),
            "n_passed": sum(results),
            "verdict": bool(sample) and all(results)}


def _verify_star(genus, args):
    pool = _default_pool(genus, args, big=True)
    graph = build_graph(pool, include_pants=True)
    cvs = [v for v in graph.vertices if v.kind != PANTS]
    want = args.samples if args.samples is not None else 10
    sample = cvs[:want]
    reports = [star_property_check(v, graph.vertices) for v in sample]
    coverages = [r["coverage"] for r in reports]
    return {"check": "star", "genus": genus, "pool_size": len(pool),
            "n_vertices_checked": len(sample),
            "coverages": coverages,
            "min_coverage": min(coverages) if coverages else 0.0,
            "verdict": bool(sample) and all(c == 1.0 for c in coverages)}


def _verify_projection(genus, args):
    import random

    pool = _default_pool(genus, args)
    graph = build_graph(pool, include_pants=True)
    rng = random.Random(args.seed)
    verts = graph.vertices
    curve_idx = [i for i, v in enumerate(verts) if v.kind != PANTS]
    want = args.samples if args.samples is not None else 100
    checked = 0
    violations = 0
    attempts = 0
    while checked < want and attempts < 50 * want:
        attempts += 1
        path = [rng.choice(curve_idx)]
        steps = rng.randint(1, 6)
        for _ in range(steps):
            nxt = sorted(graph.neighbors(path[-1]))
            if not nxt:
                break
            path.append(rng.choice(nxt))
        while path and verts[path[-1]].kind == PANTS:
            path.pop()
        if len(path) < 2:
            continue
        vpath = [verts[i] for i in path]
        proj = project_path(vpath)
        checked += 1
        if len(proj) > len(vpath):
            violations += 1
    return {"check": "projection", "genus": genus, "pool_size": len(pool),
            "n_paths": checked, "violations": violations,
            "verdict": checked >= min(want, 1) and violations == 0}


def _verify_involution(genus, args):
    if genus != 2:
        raise UsageError("the involution check is specific to genus 2")
    pool = _default_pool(genus, args)
    samples = args.samples if args.samples is not None else 50
    try:
        rep = involution_check(pool, sample_count=samples,
                               prng_seed=args.seed)
    except ValueError as exc:
        return {"check": "involution", "genus": genus,
                "error": str(exc), "verdict": False}
    rep["check"] = "involution"
    return rep


def _verify_r5(genus, args):
    if genus != 2:
        raise UsageError("the twin-pants witness is specific to genus 2")
    cap = args.weight_cap if args.weight_cap is not None else 80
    max_len = args.max_word_len if args.max_word_len is not None else 2
    pool = generate_pool(2, ["b1", "b2", "w1"], ["a1", "a2"],
                         max_len, cap, prng_seed=args.seed)
    try:
        wit = r5_witness(pool)
    except ValueError as exc:
        return {"check": "r5", "genus": genus, "pool_size": len(pool),
                "error": str(exc), "verdict": False}
    p1, p2 = wit["pants"]
    return {"check": "r5", "genus": genus, "pool_size": len(pool),
            "alpha": wit["alpha"], "alpha_word":
                word_to_obj(wit["alpha"].handlebody_word),
            "beta": wit["beta"], "beta_word":
                word_to_obj(wit["beta"].handlebody_word),
            "gamma": wit["gamma"],
            "pants": [p1, p2],
            "annotation": wit["annotation"],
            "verdict": (wit["alpha"].handlebody_word == (1, 1)
                        and wit["beta"].handlebody_word == (2, 2)
                        and p1 != p2)}


_CHECKS = {
    "dims": _verify_dims,
    "links": _verify_links,
    "cone": _verify_cone,
    "star": _verify_star,
    "projection": _verify_projection,
    "involution": _verify_involution,
    "r5": _verify_r5,
}


def cmd_verify(args):
    genus = _check_genus(args)
    if args.check == "all":
        names = ["dims", "cone", "star", "projection"]
        if genus >= 3:
            names.insert(1, "links")
        if genus == 2:
            names += ["involution", "r5"]
    else:
        names = [args.check]
    reports = []
    for name in names:
        reports.append(_CHECKS[name](genus, args))
    ok = all(r["verdict"] for r in reports)
    lines = ["%s: %s" % (r["check"], "pass" if r["verdict"] else "FAIL")
             for r in reports]
    _emit(args, {"checks": reports, "verdict": ok}, text_lines=lines)
    return 0 if ok else 1


# ----------------------------------------------------------------------
# other commands


def cmd_surface_info(args):
    genus = _check_genus(args)
    surf = build_surface(genus)
    edges = []
    for e in range(surf.n_edges):
        edges.append({"edge": e, "label": surf.edge_labels[e],
                      "loop": bool(surf.is_loop(e))})
    rep = {"genus": genus, "n_edges": surf.n_edges,
           "n_triangles": surf.n_triangles,
           "euler_characteristic": surf.euler_characteristic,
           "edges": edges}
    lines = ["genus %d: %d edges, %d triangles, chi = %d"
             % (genus, surf.n_edges, surf.n_triangles,
                surf.euler_characteristic)]
    _emit(args, rep, text_lines=lines)
    return 0


def cmd_curve(args):
    genus = _check_genus(args)
    if args.action == "classify":
        c = parse_curve_spec(genus, args.curve[0])
        v = classify_curve_vertex(c)
        rep = {"curve": c, "kind": v.kind,
               "meridian": c.is_meridian, "separating": c.is_separating,
               "homology": list(c.homology),
               "handlebody_word": word_to_obj(c.handlebody_word)}
        kind_text = ("disk (meridian)" if c.is_meridian
                     else "annulus (non-meridian)")
        _emit(args, rep, text_lines=[kind_text])
        return 0
    if args.action == "intersect":
        if len(args.curve) != 2:
            raise UsageError("intersect takes exactly two curve specs")
        from .intersect import intersection_number
        c1 = parse_curve_spec(genus, args.curve[0])
        c2 = parse_curve_spec(genus, args.curve[1])
        n = intersection_number(c1, c2)
        _emit(args, {"curves": [c1, c2], "intersection_number": n},
              text_lines=[str(n)])
        return 0
    if args.action == "twist":
        if args.about is None:
            raise UsageError("twist requires --about")
        from .twists import dehn_twist
        c = parse_curve_spec(genus, args.curve[0])
        about = parse_curve_spec(genus, args.about)
        out = dehn_twist(c, about, args.power)
        _emit(args, {"curve": c, "about": about, "power": args.power,
                     "result": out},
              text_lines=[json.dumps(curve_to_obj(out), sort_keys=True)])
        return 0
    if args.action == "word":
        c = parse_curve_spec(genus, args.curve[0])
        rep = {"curve": c,
               "pi1_word": word_to_obj(c.pi1_word),
               "handlebody_word": word_to_obj(c.handlebody_word)}
        _emit(args, rep,
              text_lines=[json.dumps(rep["handlebody_word"])])
        return 0
    raise UsageError("unknown curve action %r" % args.action)


def _unwrap(obj):
    # files written by this tool wrap the payload in a report envelope
    if isinstance(obj, dict) and "report" in obj and "version" in obj:
        return obj["report"]
    return obj


def _load_graph(path):
    try:
        obj = load_path(path)
    except OSError as exc:
        raise UsageError("cannot read graph file: %s" % exc)
    except json.JSONDecodeError as exc:
        raise UsageError("graph file does not parse: %s" % exc)
    try:
        return graph_from_obj(_unwrap(obj))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("bad graph file: %s" % exc)


def cmd_metric(args):
    graph = _load_graph(args.graph)
    if args.action == "dist":
        try:
            d = bfs_distance(graph, args.u, args.v)
        except ValueError as exc:
            raise UsageError(str(exc))
        rep = {"u": args.u, "v": args.v, "distance": d,
               "unreachable": d is None}
        _emit(args, rep,
              text_lines=["unreachable" if d is None else str(d)])
        return 0
    if args.action == "delta":
        samples = args.samples if args.samples is not None else 2000
        comps = connected_components(graph)
        comp = subgraph(graph, comps[0])
        try:
            delta = delta_estimate(comp, samples, prng_seed=args.seed)
        except ValueError as exc:
            raise UsageError(str(exc))
        total = comp.n_vertices
        quads = total * (total - 1) * (total - 2) * (total - 3) // 24
        rep = {"delta": delta, "component_size": comp.n_vertices,
               "n_components": len(comps),
               "exhaustive": quads <= samples, "samples": samples}
        _emit(args, rep, text_lines=[str(delta)])
        return 0
    if args.action == "ball":
        if not 0 <= args.center < graph.n_vertices:
            raise UsageError("center %d out of range" % args.center)
        from .pools import _bfs_from
        dist = _bfs_from(graph, args.center)
        ball = sorted((v, d) for v, d in dist.items() if d <= args.radius)
        rep = {"center": args.center, "radius": args.radius,
               "size": len(ball),
               "members": [{"vertex": v, "distance": d} for v, d in ball]}
        _emit(args, rep, text_lines=["%d vertices" % len(ball)])
        return 0
    raise UsageError("unknown metric action %r" % args.action)


def cmd_pool(args):
    if args.action != "gen":
        raise UsageError("unknown pool action %r" % args.action)
    genus = _check_genus(args)
    seeds = [s for s in (args.seeds or "").split(",") if s]
    alphabet = [s for s in (args.alphabet or "").split(",") if s]
    if not seeds:
        raise UsageError("--seeds is required (comma-separated labels)")
    max_len = args.max_word_len if args.max_word_len is not None else 2
    cap = args.weight_cap if args.weight_cap is not None else 60
    try:
        pool = generate_pool(genus, seeds, alphabet, max_len, cap,
                             prng_seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(args, pool, text_lines=["%d curves" % len(pool)])
    return 0


def cmd_complex(args):
    if args.action != "build":
        raise UsageError("unknown complex action %r" % args.action)
    try:
        obj = load_path(args.pool)
        pool = pool_from_obj(_unwrap(obj))
    except OSError as exc:
        raise UsageError("cannot read pool file: %s" % exc)
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise UsageError("bad pool file: %s" % exc)
    graph = build_graph(pool, include_pants=args.include_pants)
    audit = cobounded_check(graph)
    if not audit["verdict"]:
        raise VerdictError("coboundedness audit failed: %s"
                           % audit["violations"])
    _emit(args, graph,
          text_lines=["%d vertices, %d edges" % (graph.n_vertices,
                                                 graph.n_edges)],
          dot_text=graph_to_dot(graph))
    return 0


# ----------------------------------------------------------------------
# argument parsing


def _add_common(p):
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--seed", type=int, default=0,
                   help="PRNG seed for sampled checks")
    p.add_argument("--max-word-len", dest="max_word_len", type=int,
                   default=None)
    p.add_argument("--weight-cap", dest="weight_cap", type=int,
                   default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "dot", "text"),
                   default="json")
    p.add_argument("--uncap-genus", action="store_true")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hbcomplex",
        description="exact workbench for curves and incompressible "
                    "surfaces on a handlebody boundary")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("surface-info", help="model surface summary")
    _add_common(p)
    p.set_defaults(func=cmd_surface_info)

    p = sub.add_parser("curve", help="curve queries")
    p.add_argument("action",
                   choices=("classify", "intersect", "twist", "word"))
    p.add_argument("curve", nargs="+",
                   help="curve spec: label, JSON coords, or word@seed")
    p.add_argument("--about", default=None,
                   help="twist curve spec (for the twist action)")
    p.add_argument("--power", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", help="verification campaigns")
    p.add_argument("check",
                   choices=("all", "dims", "links", "cone", "star",
                            "projection", "involution", "r5"))
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("metric", help="graph metric queries")
    p.add_argument("action", choices=("dist", "delta", "ball"))
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--v", type=int, default=0)
    p.add_argument("--center", type=int, default=0)
    p.add_argument("--radius", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("pool", help="curve pool generation")
    p.add_argument("action", choices=("gen",))
    p.add_argument("--seeds", default=None)
    p.add_argument("--alphabet", default="")
    _add_common(p)
    p.set_defaults(func=cmd_pool)

    p = sub.add_parser("complex", help="complex graph construction")
    p.add_argument("action", choices=("build",))
    p.add_argument("--pool", required=True, help="pool JSON file")
    p.add_argument("--include-pants", dest="include_pants",
                   action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_complex)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except VerdictError as exc:
        print("verdict failure: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
