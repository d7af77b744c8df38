"""Command-line driver: verification suites, multiplicity/spectrum/complement
tables, and centralizer dimension counts.

Exit codes: 0 all checks passed / table emitted, 1 at least one check
failed, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction

from .ring import GaussRat, QQ, qint
from .linalg import (random_point, algebra_closure_dim, commutant_dimension,
                     GR_ONE)
from . import qgroup, intertwiner, coideal, combinat


SUITES = ("relations", "commutation", "cubic", "spectrum", "duality",
          "fft", "tl", "so3", "integrality", "all")


def _fmt_weight(doubled) -> str:
    parts = []
    for d in doubled:
        parts.append(str(d // 2) if d % 2 == 0 else f"{d}/2")
    return ",".join(parts)


class Reporter:
    def __init__(self):
        self.failures = 0

    def check(self, label: str, fn):
        t0 = time.time()
        try:
            ok = fn()
        except Exception as exc:           # a crash is a failure, not an abort
            ok = False
            label = f"{label} [{type(exc).__name__}: {exc}]"
        dt = time.time() - t0
        print(f"{'PASS' if ok else 'FAIL'}  {label}  ({dt:.2f}s)")
        if not ok:
            self.failures += 1


def _point(seed: int) -> GaussRat:
    return random_point(random.Random(seed))


def run_verify(args) -> int:
    rep = Reporter()
    N = args.N
    n = args.n
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    for suite in suites:
        if suite == "relations":
            rep.check(f"defining relations N={N}",
                      lambda: qgroup.verify_relations(N))
        elif suite == "commutation":
            rep.check(f"[coproduct(g), C] = 0 N={N}",
                      lambda: all(m.is_zero() for m in
                                  intertwiner.check_commutation(N).values()))
        elif suite == "cubic":
            if args.q == "spec":
                v0 = _point(args.seed)
                print(f"# specialization point v = {v0!r} (seed {args.seed})")
                rep.check(f"cubic relation N={N} at v0",
                          lambda: all(m.is_zero() for m in
                                      intertwiner.check_cubic_specialized(N, v0)))
            else:
                rep.check(f"cubic relation N={N} symbolic",
                          lambda: all(m.is_zero() for m in
                                      intertwiner.check_cubic(N, classical=args.q == "one")))
        elif suite == "spectrum":
            cls = args.q == "one"
            rep.check(f"{'classical' if cls else 'quantum'} spectrum N={N}",
                      lambda: (lambda r: r.annihilates and r.complete)(
                          intertwiner.spectrum_of_C(N, classical=cls,
                                                    eps=args.sign)))
        elif suite == "duality":
            rep.check(f"duality N={N} n={n}",
                      lambda: combinat.verify_duality(N, n))
        elif suite == "fft":
            rep.check(f"fft counts N={N} n={n}",
                      lambda: fft_counts(N, n, args.seed)[-1])
        elif suite == "tl":
            rep.check(f"TL idempotents n={n}",
                      lambda: all((e * e - e).is_zero()
                                  for e in coideal.tl_generators(n)))
            rep.check(f"TL coideal images n={n}",
                      lambda: coideal.residuals_zero(
                          coideal.check_coideal_relations(coideal.tl_braid_rep(n))))
            print(f"# measured constant c = {coideal.tl_measured_constant()!r}")
        elif suite == "so3":
            rep.check(f"so3 classical rep Nparam={N}",
                      lambda: coideal.residuals_zero(
                          coideal.check_coideal_relations(
                              coideal.so3_classical_rep(N))))
            if N % 2:
                rep.check(f"so3 nonclassical rep Nparam={N} sign={args.sign}",
                          lambda: coideal.residuals_zero(
                              coideal.check_coideal_relations(
                                  coideal.so3_nonclassical_rep(N, args.sign))))
            rep.check(f"twist commutant Nparam={N}",
                      lambda: twist_commutant(N) == (1 if (N + 1) % 2 else 2))
        elif suite == "integrality":
            rep.check(f"integrality N={N}",
                      lambda: intertwiner.integrality_check(
                          intertwiner.build_C_quantum(N), N))
    return 1 if rep.failures else 0


def twist_commutant(Nparam: int) -> int:
    r = coideal.twist_so3(coideal.so3_classical_rep(Nparam))
    return commutant_dimension(r.B, r.dim)


def fft_counts(N: int, n: int, seed: int):
    """(closure dim, sum of m^2, commutant dim or None, all equal?)"""
    v0 = _point(seed)
    r = coideal.duality_rep(N, n)
    gens = [b.specialize(v0) for b in r.B]
    if r.F is not None:
        gens.append(r.F.specialize(v0))
    d = gens[0].nrows
    closure = algebra_closure_dim(gens, d, one=GR_ONE)
    sm = combinat.sum_mult_squared(N, n)
    com = None
    if n <= 3:
        cg = [g.specialize(v0) for g in qgroup.coproduct_generators(N, n)]
        com = commutant_dimension(cg, d)
    ok = closure == sm and (com is None or com == sm)
    return closure, sm, com, ok


def run_fft(args) -> int:
    closure, sm, com, ok = fft_counts(args.N, args.n, args.seed)
    print(f"N={args.N} n={args.n} seed={args.seed}")
    print(f"algebra closure dim : {closure}")
    print(f"sum of m^2          : {sm}")
    if com is not None:
        print(f"commutant dim       : {com}")
    print("VERDICT:", "equal" if ok else "MISMATCH")
    return 0 if ok else 1


def run_table(args) -> int:
    N, n = args.N, args.n
    mode = {"sym": "symbolic", "one": "classical", "spec": "specialized"}[args.q]
    doc = {"N": N, "n": n, "mode": mode, "entries": []}
    if args.kind in ("multiplicities", "complements"):
        table = combinat.spinor_table(N, n, args.level)
        for w in sorted(table, reverse=True):
            comp = combinat.complement(w, N, n)
            doc["entries"].append({
                "weight": list(w),
                "multiplicity": table[w],
                "complement": list(comp),
                "dimension": combinat.weyl_dim(w, N),
            })
    elif args.kind == "spectrum":
        rep = intertwiner.spectrum_of_C(N, classical=args.q == "one",
                                        eps=args.sign)
        if not (rep.annihilates and rep.complete):
            print("spectrum verification failed", file=sys.stderr)
            return 1
        for val, mult in rep.multiplicities.items():
            doc["entries"].append({"eigenvalue": repr(val),
                                   "multiplicity": mult})
    out = render(doc, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        print(out, end="")
    return 0


def render(doc, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    # weights are doubled integers; complements only for N odd (for N even
    # they are plain diagram row lengths)
    def show(key, val):
        if not isinstance(val, list):
            return val
        if key == "complement" and doc["N"] % 2 == 0:
            return ",".join(map(str, val))
        return _fmt_weight(val)

    if fmt == "csv":
        buf = io.StringIO()
        keys = sorted({k for e in doc["entries"] for k in e})
        writer = csv.writer(buf)
        writer.writerow(keys)
        for e in doc["entries"]:
            writer.writerow([show(k, e.get(k)) for k in keys])
        return buf.getvalue()
    lines = [f"N={doc['N']} n={doc['n']} mode={doc['mode']}"]
    for e in doc["entries"]:
        if "weight" in e:
            lines.append(f"  ({show('weight', e['weight'])})"
                         f"  x{e['multiplicity']}  dim={e['dimension']}"
                         f"  complement=({show('complement', e['complement'])})")
        else:
            lines.append(f"  {e['eigenvalue']}  x{e['multiplicity']}")
    return "\n".join(lines) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="spindual")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--N", type=int, default=5)
        sp.add_argument("--n", type=int, default=3)
        sp.add_argument("--level", type=int, default=None)
        sp.add_argument("--q", choices=("sym", "one", "spec"), default="sym")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--sign", choices=("+", "-"), default="+")
        sp.add_argument("--format", choices=("json", "csv", "text"),
                        default="text")
        sp.add_argument("--out", default=None)

    sv = sub.add_parser("verify")
    sv.add_argument("suite", choices=SUITES)
    common(sv)
    st = sub.add_parser("table")
    st.add_argument("kind", choices=("multiplicities", "spectrum",
                                     "complements"))
    common(st)
    sf = sub.add_parser("fft")
    common(sf)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args.sign = 1 if args.sign == "+" else -1
    if args.N < 2 or args.n < 1:
        print("invalid N/n", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            return run_verify(args)
        if args.command == "table":
            return run_table(args)
        if args.command == "fft":
            return run_fft(args)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
