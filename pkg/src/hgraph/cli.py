"""Command-line front end.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
error, 3 oracle mismatch during ``replay --check oracle``.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations

from . import generators as gen
from . import oracle
from .bench import PHASES, measure
from .census import CENSUS_FIELDS, global_census, list_cliques, list_triangles
from .core import HGraph
from .diamond import DiamondFreeGraph, recognize_diamond_free
from .elimination import copwin_order, simple_elimination_ordering
from .errors import EmptyGraph, HGraphError
from .io import ReplayError, load_edgelist, parse_trace

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class OracleMismatch(Exception):
    def __init__(self, line, msg):
        super().__init__(f"line {line}: oracle mismatch: {msg}")


def _ids(vs):
    return " ".join(map(str, vs))


def _labelled(label, vs):
    return " ".join([label, *map(str, vs)])


def _census_dict(g):
    return global_census(g).as_dict()


def _emit(out, lines):
    for line in lines:
        out.write(line + "\n")


# -- verdicts --------------------------------------------------------------


def _verdict(g, cls):
    """``(positive, detail lines)`` for one recognition class."""
    if cls == "diamond-free":
        cert = recognize_diamond_free(g)
        if cert is None:
            fam = sorted(tuple(sorted(c)) for c in DiamondFreeGraph.from_graph(g).clique_family())
            return True, ["DIAMOND-FREE"], [_labelled("clique", c) for c in fam]
        return False, ["NOT-DIAMOND-FREE"], [
            _labelled("certificate", cert.vertices),
            _labelled("missing", cert.missing),
        ]
    if cls == "copwin":
        res, yes, no = copwin_order(g), "COPWIN", "NOT-COPWIN"
    else:
        res, yes, no = simple_elimination_ordering(g), "STRONGLY-CHORDAL", "NOT-STRONGLY-CHORDAL"
    if res.found:
        return True, [yes], [_labelled("order", res.order)]
    rg = res.residual
    detail = [_labelled("removed", res.order), _labelled("residual", sorted(rg))]
    detail += [f"edge {u} {v}" for u, v in rg.edges()]
    return False, [no], detail


def _oracle_verdict(mirror, cls):
    dg = _dense(mirror)[0]
    if cls == "diamond-free":
        return oracle.bf_diamond(dg) is None
    if cls == "copwin":
        return oracle.bf_copwin(dg)
    return oracle.bf_strongly_chordal(dg)


# -- commands --------------------------------------------------------------


def cmd_census(args, out):
    c = _census_dict(load_edgelist(args.file))
    _emit(out, [f"{k} {c[k]}" for k in CENSUS_FIELDS])
    return EXIT_OK


def cmd_triangles(args, out):
    g = load_edgelist(args.file)
    _emit(out, [_ids(t) for t in sorted(list_triangles(g))])
    return EXIT_OK


def cmd_cliques(args, out):
    g = load_edgelist(args.file)
    _emit(out, [_ids(t) for t in sorted(list_cliques(g, args.k))])
    return EXIT_OK


def cmd_stats(args, out):
    n, m, delta, h, core = load_edgelist(args.file).stats()
    _emit(out, [f"n {n}", f"m {m}", f"min_degree {delta}", f"h_index {h}", f"degeneracy {core}"])
    return EXIT_OK


def cmd_recognize(args, out):
    g = load_edgelist(args.file)
    ok, head, detail = _verdict(g, args.graph_class)
    _emit(out, head + detail)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _dense(mirror):
    ids = sorted(mirror)
    idx = {v: i for i, v in enumerate(ids)}
    edges = [(idx[u], idx[v]) for u in mirror for v in mirror[u] if u < v]
    return oracle.DenseGraph(len(ids), edges), ids


class _Replay:
    """Replays a trace against an HGraph (or a diamond-free state) plus a
    plain adjacency-set mirror used for oracle checks."""

    def __init__(self, maintain, check, out):
        self.df = DiamondFreeGraph() if maintain == "diamond-free" else None
        self.g = self.df.graph if self.df else HGraph()
        self.check = check == "oracle"
        self.out = out
        self.mirror = {}
        self.ops = self.queries = self.rejected = self.checked = 0

    def _reject(self, op, cert):
        self.rejected += 1
        self.out.write(
            f"line {op.line}: REJECTED {op.op} {_ids(op.args)} "
            f"certificate {_ids(cert.vertices)} missing {_ids(cert.missing)}\n"
        )
        if self.check:
            self._check_certificate(op, cert)

    def _check_certificate(self, op, cert):
        # the graph the rejected update would have produced
        trial = {v: set(nb) for v, nb in self.mirror.items()}
        if op.op == "av":
            trial[op.args[0]] = set(op.args[1:])
            for u in op.args[1:]:
                trial[u].add(op.args[0])
        elif op.op == "ae":
            u, v = op.args
            trial[u].add(v)
            trial[v].add(u)
        else:
            u, v = op.args
            trial[u].discard(v)
            trial[v].discard(u)
        vs = cert.vertices
        present = [b in trial[a] for a, b in combinations(vs, 2)]
        a, b = cert.missing
        if sum(present) != 5 or b in trial[a]:
            raise OracleMismatch(op.line, f"certificate {cert} is not an induced diamond")
        self.checked += 1

    def apply(self, op):
        g, df, mirror = self.g, self.df, self.mirror
        a = op.args
        self.ops += 1
        if op.op == "av":
            v, nbrs = a[0], list(a[1:])
            cert = df.vertex_insert(v, nbrs) if df else g.vertex_insert(v, nbrs)
            if cert:
                return self._reject(op, cert)
            mirror[v] = set(nbrs)
            for u in nbrs:
                mirror[u].add(v)
        elif op.op == "rv":
            (df or g).vertex_remove(a[0])
            for u in mirror.pop(a[0]):
                mirror[u].discard(a[0])
        elif op.op in ("ae", "re"):
            u, v = a
            if df:
                cert = df.edge_insert(u, v) if op.op == "ae" else df.edge_remove(u, v)
                if cert:
                    return self._reject(op, cert)
            elif op.op == "ae":
                g.edge_insert(u, v)
            else:
                g.edge_remove(u, v)
            if op.op == "ae":
                mirror[u].add(v)
                mirror[v].add(u)
            else:
                mirror[u].discard(v)
                mirror[v].discard(u)
        else:
            self.ops -= 1
            self.queries += 1
            self.query(op)

    def query(self, op):
        g, out = self.g, self.out
        if op.op == "q adj":
            u, v = op.args
            ans = g.adjacent(u, v)
            out.write(f"adj {u} {v} {'true' if ans else 'false'}\n")
            if self.check and ans != (v in self.mirror[u]):
                raise OracleMismatch(op.line, "adjacency")
        elif op.op == "q census":
            c = _census_dict(g)
            out.write("census " + " ".join(f"{k}={c[k]}" for k in CENSUS_FIELDS) + "\n")
            if self.check and oracle.bf_four_census(_dense(self.mirror)[0]) != c:
                raise OracleMismatch(op.line, "census")
        elif op.op == "q cliques":
            (k,) = op.args
            found = sorted(list_cliques(g, k))
            out.write(f"cliques {k} count={len(found)}\n")
            _emit(out, [_labelled("clique", c) for c in found])
            if self.check:
                dg, ids = _dense(self.mirror)
                ref = {tuple(sorted(ids[i] for i in c)) for c in oracle.bf_cliques(dg, k)}
                if ref != set(found):
                    raise OracleMismatch(op.line, f"{k}-cliques")
        else:
            (cls,) = op.args
            try:
                ok, head, detail = _verdict(g, cls)
            except EmptyGraph as exc:
                raise ReplayError(op.line, str(exc)) from None
            shown = [] if ok and cls == "diamond-free" else detail[:2]
            out.write(" ".join(head + shown) + "\n")
            if self.check and ok != _oracle_verdict(self.mirror, cls):
                raise OracleMismatch(op.line, f"{cls} verdict")
        if self.check:
            self.checked += 1

    def finish(self):
        if self.check:
            edges = {(u, v) for u in self.mirror for v in self.mirror[u] if u < v}
            if set(self.g.edges()) != edges or set(self.g) != set(self.mirror):
                raise OracleMismatch(0, "final graph differs from the naive replay")
            bad = self.g.check_structure() + (self.df.check() if self.df else [])
            if bad:
                raise OracleMismatch(0, bad[0])
        tail = f" checked={self.checked}" if self.check else ""
        self.out.write(
            f"summary n={self.g.n} m={self.g.m} ops={self.ops} queries={self.queries} "
            f"rejected={self.rejected}{tail}\n"
        )


def cmd_replay(args, out):
    with open(args.file) as fh:
        ops = parse_trace(fh.read())
    r = _Replay(args.maintain, args.check, out)
    for op in ops:
        try:
            r.apply(op)
        except HGraphError as exc:
            if isinstance(exc, ReplayError):
                raise
            raise ReplayError(op.line, str(exc)) from None
    r.finish()
    return EXIT_OK


_FAMILIES = {
    "bounded": lambda n, a: gen.bounded_degeneracy(n, a.degeneracy, a.seed),
    "tree": lambda n, a: gen.random_tree(n, a.seed),
    "star": lambda n, a: gen.star(n - 1),
    "complete": lambda n, a: gen.complete(n),
}


def cmd_bench(args, out):
    cols = ["family", "n", "m", "degeneracy", "h_index"]
    for p in PHASES:
        cols += [p, f"{p}_ratio"]
    _emit(out, [" ".join(cols)])
    for n in args.sizes:
        r = measure(_FAMILIES[args.family](n, args), n)
        row = [args.family] + [str(r[c]) for c in cols[1:5]]
        for p in PHASES:
            row += [str(r[p]), f"{r[p] / r['bound']:.3f}"]
        _emit(out, [" ".join(row)])
    return EXIT_OK


def _sizes(text):
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return vals


def build_parser():
    p = argparse.ArgumentParser(prog="hgraph", description="Sparse dynamic graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_, *leading):
        sp = sub.add_parser(name, help=help_)
        for a in leading:
            sp.add_argument(a[0], **a[1])
        sp.add_argument("file", help="edge-list file")
        sp.add_argument("--format", choices=["edgelist"], default="edgelist")
        return sp

    with_file("census", "induced four-vertex subgraph counts").set_defaults(run=cmd_census)
    with_file("triangles", "list all triangles").set_defaults(run=cmd_triangles)
    sp = with_file("cliques", "list all k-cliques")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(run=cmd_cliques)
    with_file("stats", "n, m, minimum degree, h-index, degeneracy").set_defaults(run=cmd_stats)
    classes = {"metavar": "class", "choices": ["diamond-free", "copwin", "strongly-chordal"]}
    sp = with_file("recognize", "recognise a graph class", ("graph_class", classes))
    sp.set_defaults(run=cmd_recognize)

    sp = sub.add_parser("replay", help="replay an update trace")
    sp.add_argument("file", help="trace file")
    sp.add_argument("--check", choices=["none", "oracle"], default="none")
    sp.add_argument("--maintain", choices=["plain", "diamond-free"], default="plain",
                    help="diamond-free refuses updates that create a diamond")
    sp.set_defaults(run=cmd_replay)

    sp = sub.add_parser("bench", help="operation counts against n + (degeneracy+1) m")
    sp.add_argument("--family", choices=sorted(_FAMILIES), default="bounded")
    sp.add_argument("--sizes", type=_sizes, default=[500, 1000, 2000], help="comma-separated vertex counts")
    sp.add_argument("--degeneracy", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(run=cmd_bench)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except OracleMismatch as exc:
        print(f"hgraph: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (HGraphError, OSError) as exc:
        print(f"hgraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
