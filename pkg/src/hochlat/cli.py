"""Command line front end: constructions and checks as subcommands.

Output conventions: data on stdout, diagnostics on stderr, byte-identical
across runs.  Exit 0 on success or a verified check, 1 when a check fails,
2 on usage or size-guard problems.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import run_all
from .complexes import SimplicialComplex, cjc, shedding_witness
from .errors import HochlatError, SizeBound
from .galois import galois_graph, max_ortho_pairs_lattice
from .hochschild import (
    build_hoch,
    enumerate_triwords,
    format_triword,
    irreducible_of_triword,
    l1,
)
from .lattice import build_bool, jsd_labeling
from .polynomials import BiPoly
from .poset import are_isomorphic
from .shuffles import clo, render_word, shuffle_lattice, sigma
from .triangles import (
    char_poly_closed,
    f_closed,
    f_from_cores,
    f_from_m,
    f_tilde,
    face_count_closed,
    face_vector,
    g_conjecture_check,
    h_closed,
    h_from_antichains,
    h_from_m,
    h_tilde,
    m_closed,
    m_triangle,
    rank_poly_closed,
)

SCHEMA = "hochlat/1"
MAX_ELEMENTS = 5000


class UsageError(Exception):
    pass


def _emit(text):
    if not text.endswith("\n"):
        text += "\n"
    sys.stdout.write(text)


def _emit_json(payload):
    _emit(json.dumps({"schema": SCHEMA, **payload}, indent=2))


# -- structure selection -------------------------------------------------------


def _add_selector(sub, families, default=None):
    sub.add_argument("--family", choices=families, default=default, required=default is None)
    sub.add_argument("--n", type=int, help="size for hoch/bool")
    sub.add_argument("--a", type=int, help="first shuffle size")
    sub.add_argument("--b", type=int, help="second shuffle size")
    if "clo-of" in families or "galois-of" in families:
        sub.add_argument(
            "--of",
            choices=["hoch", "shuffle", "bool"],
            default="hoch",
            help="inner family for clo-of / galois-of",
        )


def _base_structure(family, args):
    if family == "hoch":
        if args.n is None:
            raise UsageError("family hoch needs --n")
        return build_hoch(args.n), f"hoch_{args.n}"
    if family == "bool":
        if args.n is None:
            raise UsageError("family bool needs --n")
        if 2**args.n > MAX_ELEMENTS:
            raise SizeBound(f"bool({args.n}) exceeds the {MAX_ELEMENTS}-element bound")
        return build_bool(args.n), f"bool_{args.n}"
    if family == "shuffle":
        if args.a is None or args.b is None:
            raise UsageError("family shuffle needs --a and --b")
        return shuffle_lattice(args.a, args.b), f"shuffle_{args.a}_{args.b}"
    raise UsageError(f"not a base family: {family}")


def _lattice_of(structure):
    return getattr(structure, "lattice", structure)


def _select(args):
    """Resolve the selector flags to ("poset"|"digraph", object, slug)."""
    family = args.family
    if family in ("hoch", "bool", "shuffle"):
        structure, slug = _base_structure(family, args)
        return "poset", _lattice_of(structure).poset, slug
    inner, slug = _base_structure(args.of, args)
    if family == "clo-of":
        return "poset", clo(_lattice_of(inner)).poset, f"clo_of_{slug}"
    if family == "galois-of":
        return "digraph", galois_graph(_lattice_of(inner)).graph, f"galois_of_{slug}"
    raise UsageError(f"unknown family: {family}")


# -- shared renderers -----------------------------------------------------------


def _poset_text(p):
    lines = [f"elements: {p.n}", f"covers: {len(p.covers)}"]
    lines += [f"  {p.labels[a]} -> {p.labels[b]}" for a, b in p.covers]
    return "\n".join(lines)


def _graph_text(g):
    lines = [f"vertices: {g.k}"]
    lines += [f"  {lbl}" for lbl in g.labels]
    edges = sorted(g.edges)
    lines.append(f"edges: {len(edges)}")
    lines += [f"  {g.labels[s]} -> {g.labels[t]}" for s, t in edges]
    return "\n".join(lines)


def _sigma_table_lines(n, ascii_mode):
    rows = [("u", "tau(u)", "l1(u)", "sigma(u)")]
    for u in enumerate_triwords(n):
        tau = tuple(i for i in range(2, n + 1) if u[i - 1] != 2)
        rows.append(
            (
                format_triword(u),
                render_word(tau, ascii_mode),
                str(l1(u)),
                render_word(sigma(u), ascii_mode),
            )
        )
    widths = [max(len(row[c]) for row in rows) for c in range(4)]
    out = []
    for row in rows:
        cells = [row[c].ljust(widths[c]) for c in range(3)] + [row[3]]
        out.append("  ".join(cells).rstrip())
    return out


def _witness_lines(w, label, indent=""):
    if w[0] == "simplex":
        members = " ".join(sorted(label(v) for v in w[1]))
        return [f"{indent}simplex: {members or '(empty)'}"]
    _, v, link_w, del_w = w
    out = [f"{indent}shed {label(v)}"]
    out.append(f"{indent}  link:")
    out += _witness_lines(link_w, label, indent + "    ")
    out.append(f"{indent}  deletion:")
    out += _witness_lines(del_w, label, indent + "    ")
    return out


def _witness_json(w, label):
    if w[0] == "simplex":
        return {"simplex": sorted(label(v) for v in w[1])}
    _, v, link_w, del_w = w
    return {
        "shed": label(v),
        "link": _witness_json(link_w, label),
        "deletion": _witness_json(del_w, label),
    }


# -- subcommand handlers ----------------------------------------------------------


def _cmd_build(args):
    kind, obj, slug = _select(args)
    if args.format == "dot":
        _emit(obj.to_dot(name=slug))
    elif args.format == "json":
        _emit_json({"kind": kind, **obj.to_json()})
    else:
        _emit(_poset_text(obj) if kind == "poset" else _graph_text(obj))
    return 0


def _irr_namer(args, structure, lat):
    if args.family == "hoch":
        return lambda e: str(irreducible_of_triword(structure.triword(e)))
    return lambda e: str(lat.poset.labels[e])


def _cmd_irr(args):
    structure, _ = _base_structure(args.family, args)
    lat = _lattice_of(structure)
    name = _irr_namer(args, structure, lat)
    lab = jsd_labeling(lat)
    atomset = set(lat.atoms())
    irr_rows = [
        {
            "name": name(j),
            "element": str(lat.poset.labels[j]),
            "lower_cover": str(lat.poset.labels[lat.j_star(j)]),
            "atom": j in atomset,
        }
        for j in lat.join_irreducibles()
    ]
    cover_rows = [
        {
            "lower": str(lat.poset.labels[a]),
            "upper": str(lat.poset.labels[b]),
            "label": name(lab.label(a, b)),
        }
        for a, b in lat.covers
    ]
    if args.format == "json":
        _emit_json({"join_irreducibles": irr_rows, "cover_labels": cover_rows})
        return 0
    lines = [f"join irreducibles: {len(irr_rows)}"]
    lines += [
        f"  {r['name']} = {r['element']}  lower cover {r['lower_cover']}"
        + ("  atom" if r["atom"] else "")
        for r in irr_rows
    ]
    lines.append(f"cover labels: {len(cover_rows)}")
    lines += [f"  {r['lower']} -> {r['upper']}  {r['label']}" for r in cover_rows]
    _emit("\n".join(lines))
    return 0


def _cmd_cjc(args):
    structure, _ = _base_structure(args.family, args)
    lat = _lattice_of(structure)
    cx = cjc(lat)
    name = _irr_namer(args, structure, lat)
    cx = SimplicialComplex(cx.facets, labels={v: name(v) for v in cx.vertices})
    witness = shedding_witness(cx)
    decomposable = witness is not None
    if args.format == "off":
        _emit(cx.to_off_text())
        return 0
    if args.format == "json":
        payload = {
            **cx.to_json(),
            "faces": [sorted(cx.label(v) for v in f) for f in cx.faces()],
            "vertex_decomposable": decomposable,
        }
        if decomposable:
            payload["shedding"] = _witness_json(witness, cx.label)
        _emit_json(payload)
        return 0
    lines = [f"facets: {len(cx.facets)}"]
    lines += ["  " + " ".join(sorted(cx.label(v) for v in f)) for f in cx.facets]
    lines.append(f"vertex decomposable: {'yes' if decomposable else 'no'}")
    if decomposable:
        lines.append("shedding:")
        lines += _witness_lines(witness, cx.label, "  ")
    _emit("\n".join(lines))
    return 0


def _cmd_clo(args):
    if args.table:
        if args.family != "hoch":
            raise UsageError("--table is defined for the hoch family")
        if args.n is None:
            raise UsageError("family hoch needs --n")
        _emit("\n".join(_sigma_table_lines(args.n, args.ascii)))
        return 0
    structure, slug = _base_structure(args.family, args)
    p = clo(_lattice_of(structure)).poset
    if args.format == "dot":
        _emit(p.to_dot(name=f"clo_of_{slug}"))
    elif args.format == "json":
        _emit_json({"kind": "poset", **p.to_json()})
    else:
        _emit(_poset_text(p))
    return 0


def _cmd_galois(args):
    structure, slug = _base_structure(args.family, args)
    lat = _lattice_of(structure)
    geo = galois_graph(lat)
    g = geo.graph
    code = 0
    extra_lines = []
    extra_json = {}
    if args.mo:
        mo = max_ortho_pairs_lattice(g)
        iso = bool(are_isomorphic(mo.lattice.poset, lat.poset))
        extra_lines = [
            f"orthogonal pairs: {mo.lattice.n}",
            f"reconstruction isomorphic: {'yes' if iso else 'no'}",
        ]
        extra_json = {"orthogonal_pairs": mo.lattice.n, "reconstruction_isomorphic": iso}
        code = 0 if iso else 1
    if args.format == "dot":
        _emit(g.to_dot(name=f"galois_of_{slug}"))
    elif args.format == "json":
        _emit_json({"kind": "digraph", **g.to_json(), **extra_json})
    else:
        _emit("\n".join([_graph_text(g)] + extra_lines))
    return code


def _triangle_polys(n, which):
    table = {
        "m": lambda: m_closed(n),
        "f": lambda: f_closed(n),
        "h": lambda: h_closed(n),
        "rank": lambda: rank_poly_closed(n),
        "char": lambda: char_poly_closed(n),
    }
    picked = list(table) if which == "all" else [which]
    return {w: table[w]() for w in picked}


def _cmd_triangles(args):
    if args.n is None:
        raise UsageError("triangles needs --n")
    n = args.n
    if args.check:
        checks = [
            ("f paths agree", lambda: f_from_m(n) == f_closed(n) == f_tilde(n) == f_from_cores(n)),
            (
                "h paths agree",
                lambda: h_from_m(n) == h_closed(n) == h_tilde(n) == h_from_antichains(n),
            ),
            (
                "m x-section is the characteristic polynomial",
                lambda: BiPoly(
                    {(j, 0): c for (i, j), c in m_closed(n).terms.items() if i == 0}
                )
                == char_poly_closed(n),
            ),
            ("m at (1,1) is 1", lambda: m_closed(n).eval_at(1, 1) == 1),
        ]
        if n <= 6:
            checks.insert(
                0,
                (
                    "definitional m equals closed m",
                    lambda: m_triangle(clo(build_hoch(n).lattice)) == m_closed(n),
                ),
            )
        else:
            print("skip definitional m (bounded at n=6)", file=sys.stderr)
        ok = True
        for label, fn in checks:
            good = fn()
            ok = ok and good
            _emit(("ok   " if good else "FAIL ") + label)
        return 0 if ok else 1
    polys = _triangle_polys(n, args.which)
    if args.format == "json":
        _emit_json({"n": n, **{w: p.to_json() for w, p in polys.items()}})
        return 0
    if args.which != "all":
        _emit(polys[args.which].to_str())
        return 0
    _emit("\n".join(f"{w} = {p.to_str()}" for w, p in polys.items()))
    return 0


def _cmd_faces(args):
    if args.n is None:
        raise UsageError("faces needs --n")
    got = face_vector(args.n)
    closed = [face_count_closed(args.n, i) for i in range(args.n + 1)]
    if got != closed:
        print(f"enumeration {got} disagrees with the closed count {closed}", file=sys.stderr)
        return 1
    if args.format == "json":
        _emit_json({"n": args.n, "face_vector": got})
    else:
        _emit(" ".join(str(f) for f in got))
    return 0


def _cmd_conjecture(args):
    if args.n is None:
        raise UsageError("conjecture needs --n")
    report = g_conjecture_check(args.n)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "match": report["match"],
                "computed": report["computed"].to_json(),
                "conjectured": report["conjectured"].to_json(),
            }
        )
        return 0
    _emit(
        "\n".join(
            [
                f"computed:    {report['computed'].to_str()}",
                f"conjectured: {report['conjectured'].to_str()}",
                f"verdict: {'match' if report['match'] else 'MISMATCH'}",
            ]
        )
    )
    return 0


def _cmd_check(args):
    if args.n is None:
        raise UsageError("check needs --n")
    return 0 if run_all(args.n, write=lambda line: _emit(line)) else 1


# -- parser ------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hochlat",
        description="Triword lattices, their satellites, and exact cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="emit the selected structure")
    _add_selector(p_build, ["hoch", "shuffle", "bool", "clo-of", "galois-of"])
    p_build.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_build.set_defaults(fn=_cmd_build)

    p_irr = sub.add_parser("irr", help="join irreducibles and cover labels")
    _add_selector(p_irr, ["hoch", "shuffle", "bool"], default="hoch")
    p_irr.add_argument("--format", choices=["text", "json"], default="text")
    p_irr.set_defaults(fn=_cmd_irr)

    p_cjc = sub.add_parser("cjc", help="canonical join complex and decomposability")
    _add_selector(p_cjc, ["hoch", "bool"], default="hoch")
    p_cjc.add_argument("--format", choices=["text", "json", "off"], default="text")
    p_cjc.set_defaults(fn=_cmd_cjc)

    p_clo = sub.add_parser("clo", help="core label order; --table for the sigma table")
    _add_selector(p_clo, ["hoch", "bool"], default="hoch")
    p_clo.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_clo.add_argument("--table", action="store_true")
    p_clo.add_argument("--ascii", action="store_true", help="ascii word rendering")
    p_clo.set_defaults(fn=_cmd_clo)

    p_gal = sub.add_parser("galois", help="galois graph; --mo reconstructs from it")
    _add_selector(p_gal, ["hoch", "shuffle", "bool"], default="hoch")
    p_gal.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_gal.add_argument("--mo", action="store_true")
    p_gal.set_defaults(fn=_cmd_galois)

    p_tri = sub.add_parser("triangles", help="M/F/H and friends; --check cross-verifies")
    _add_selector(p_tri, ["hoch"], default="hoch")
    p_tri.add_argument("--which", choices=["m", "f", "h", "rank", "char", "all"], default="all")
    p_tri.add_argument("--format", choices=["text", "json"], default="text")
    p_tri.add_argument("--check", action="store_true")
    p_tri.set_defaults(fn=_cmd_triangles)

    p_faces = sub.add_parser("faces", help="freehedron face vector")
    p_faces.add_argument("--n", type=int)
    p_faces.add_argument("--format", choices=["text", "json"], default="text")
    p_faces.set_defaults(fn=_cmd_faces)

    p_conj = sub.add_parser("conjecture", help="report a conjecture verdict")
    p_conj.add_argument("target", choices=["g"])
    p_conj.add_argument("--n", type=int)
    p_conj.add_argument("--format", choices=["text", "json"], default="text")
    p_conj.set_defaults(fn=_cmd_conjecture)

    p_check = sub.add_parser("check", help="run the property battery at one size")
    p_check.add_argument("target", choices=["all"])
    p_check.add_argument("--n", type=int)
    p_check.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except SizeBound as e:
        print(f"size bound exceeded: {e}", file=sys.stderr)
        return 2
    except HochlatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
