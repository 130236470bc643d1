"""Command line front end.

    superdual verify sergeev --m 1 --n 2 --d 2
    superdual verify cyclotomic --m 1 --n 2 --d 2 --c 0,0
    superdual wchi hilbert --m 1 --n 2 --max-kazhdan 6
    superdual report all --workers 4 --format json

Every flag can also come from the environment as SUPERDUAL_<FLAG>, e.g.
SUPERDUAL_SIZE_CAP=125.  Flags on the command line win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import duality
from .glsuper import nilpotent_from_partitions, parse_partitions
from .hecke import CharVector

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

VERIFY = ("sergeev", "vust", "trunc-poly", "hecke-relations", "cyclotomic", "hecke-dc",
          "filtration", "centralizer", "axioms", "theta-sigma")
WCHI = ("discover", "hilbert")

ENV_PREFIX = "SUPERDUAL_"


class UsageError(ValueError):
    pass


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _int_env(name, default):
    raw = _env(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_PREFIX}{name.upper()} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None)
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--d", type=int, default=None)
    common.add_argument("--partitions", default=None, help='nilpotent Jordan type "λ|μ", e.g. "1|1,1"')
    common.add_argument("--c", default=None, help="character vector c_1,...,c_n (p/q allowed)")
    common.add_argument("--max-kazhdan", type=int, default=None)
    common.add_argument("--size-cap", type=int, default=None)
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--no-timing", action="store_true", default=None,
                        help="report elapsed_ms as 0 so output is byte-identical across runs")

    p = argparse.ArgumentParser(prog="superdual", description="Exact checks of super Schur-Weyl type dualities.")
    sub = p.add_subparsers(dest="group", required=True)
    v = sub.add_parser("verify", help="run one verifier")
    v.add_argument("what", choices=VERIFY)
    for action in common._actions:
        v._add_action(action)
    w = sub.add_parser("wchi", help="truncated W-superalgebra computations")
    w.add_argument("what", choices=WCHI)
    for action in common._actions:
        w._add_action(action)
    r = sub.add_parser("report", help="run the full suite")
    r.add_argument("what", choices=("all",))
    for action in common._actions:
        r._add_action(action)
    return p


def resolve_config(ns) -> dict:
    """Merge parsed flags with SUPERDUAL_* environment values and validate."""
    cfg = {}
    for name, default in (("m", None), ("n", None), ("d", None), ("max_kazhdan", 6),
                          ("size_cap", duality.DEFAULT_SIZE_CAP), ("seed", 0), ("workers", 1)):
        val = getattr(ns, name)
        cfg[name] = val if val is not None else _int_env(name, default)
    cfg["format"] = ns.format or _env("format", "text")
    if cfg["format"] not in ("text", "json"):
        raise UsageError(f"unknown format {cfg['format']!r}")
    cfg["partitions"] = ns.partitions if ns.partitions is not None else _env("partitions")
    cfg["c"] = ns.c if ns.c is not None else _env("c")
    timing_off = ns.no_timing if ns.no_timing is not None else _env("no_timing", "") not in ("", "0")
    cfg["timing"] = not timing_off
    cfg["group"], cfg["what"] = ns.group, ns.what

    if cfg["partitions"]:
        try:
            lam, mu = parse_partitions(cfg["partitions"])
        except ValueError as exc:
            raise UsageError(str(exc))
        for key, val in (("m", sum(lam)), ("n", sum(mu))):
            if cfg[key] is None:
                cfg[key] = val
            elif cfg[key] != val:
                raise UsageError(f"--partitions {cfg['partitions']!r} has {key}={val}, but --{key} {cfg[key]}")
        cfg["nilp"] = (lam, mu)
    else:
        cfg["nilp"] = None

    if cfg["group"] != "report":
        needs_d = not (cfg["group"] == "wchi" or cfg["what"] in ("centralizer", "theta-sigma"))
        required = ("m", "n", "d") if needs_d else (("m", "n") if cfg["what"] not in ("centralizer", "theta-sigma") else ())
        missing = [k for k in required if cfg[k] is None]
        if missing:
            raise UsageError("missing " + ", ".join("--" + k for k in missing))
        if cfg["m"] is not None and cfg["n"] is not None and not 1 <= cfg["m"] <= cfg["n"]:
            raise UsageError("need 1 <= m <= n")
        if cfg["d"] is not None and cfg["d"] < 1:
            raise UsageError("need d >= 1")
    if cfg["c"] is not None:
        if cfg["n"] is None:
            raise UsageError("--c needs --n")
        try:
            cfg["c"] = CharVector.parse(cfg["c"], cfg["n"])
        except ValueError as exc:
            raise UsageError(str(exc))
    if cfg["max_kazhdan"] < 0:
        raise UsageError("--max-kazhdan must be >= 0")
    if cfg["workers"] < 1:
        raise UsageError("--workers must be >= 1")
    return cfg


def run_one(cfg: dict) -> dict:
    """Run a single verify/wchi command; returns the report as a dict."""
    g, what = cfg["group"], cfg["what"]
    m, n, d, cap, c = cfg["m"], cfg["n"], cfg["d"], cfg["size_cap"], cfg["c"]
    if g == "wchi":
        rep = duality.wchi_report(m, n, cfg["max_kazhdan"], what)
    elif what == "sergeev":
        rep = duality.verify_sergeev(m, n, d, cap)
    elif what == "vust":
        nilp = nilpotent_from_partitions(*cfg["nilp"]) if cfg["nilp"] else None
        rep = duality.verify_vust(m, n, d, nilp, cap)
    elif what == "trunc-poly":
        rep = duality.verify_trunc_poly_dc(m, n, d, cap)
    elif what == "hecke-relations":
        rep = duality.hecke_relations_report(m, n, d, c, cap)
    elif what == "cyclotomic":
        rep = duality.cyclotomic_report(m, n, d, c, cap)
    elif what == "hecke-dc":
        if d < 2:
            raise UsageError("hecke-dc needs d >= 2")
        duality.check_cap(m, n, d, cap)
        rep = duality.verify_hecke_dc(m, n, d, c, max_kazhdan=cfg["max_kazhdan"], size_cap=cap)
    elif what == "filtration":
        duality.check_cap(m, n, d, cap)
        rep = duality.filtration_consistency(m, n, d, c)
    elif what == "centralizer":
        rep = duality.centralizer_structure(4)
    elif what == "axioms":
        duality.check_cap(m, n, d, cap)
        rep = duality.coefficient_axioms(m, n, d)
    elif what == "theta-sigma":
        rep = duality.theta_sigma_checks(3, seed=cfg["seed"])
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown command {what}")
    out = rep.to_dict()
    if not cfg["timing"]:
        out["elapsed_ms"] = 0
    return out


def suite_configs(base: dict) -> list:
    """The full acceptance grid as a list of single-command configs."""
    grid = [(1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 2), (2, 3, 2)]
    out = []

    def add(group, what, m=None, n=None, d=None, c=None, nilp=None, **kw):
        cfg = dict(base, group=group, what=what, m=m, n=n, d=d, c=c, nilp=nilp)
        cfg.update(kw)
        out.append(cfg)

    for (m, n, d) in grid:
        for c in (CharVector.zero(n), CharVector(range(1, n + 1))):
            add("verify", "hecke-relations", m, n, d, c)
            add("verify", "cyclotomic", m, n, d, c)
    for N in range(2, 65):
        for m in range(1, N // 2 + 1):
            d = 1
            while N ** d <= 64:
                add("verify", "sergeev", m, N - m, d, size_cap=64)
                d += 1
    for (m, n, d) in ((1, 2, 2), (1, 2, 3), (2, 2, 2)):
        add("verify", "trunc-poly", m, n, d)
    add("verify", "vust", 1, 2, 2, nilp=((1,), (1, 1)))
    add("verify", "vust", 1, 1, 2, nilp=((1,), (1,)))
    add("verify", "centralizer")
    for (m, n, d) in ((1, 2, 2), (2, 2, 2)):
        add("verify", "axioms", m, n, d)
    for (m, n) in ((1, 1), (1, 2), (2, 2)):
        add("wchi", "hilbert", m, n, max_kazhdan=6)
    for (m, n, d) in ((1, 2, 2), (2, 2, 2)):
        for c in (CharVector.zero(n), CharVector([x * x + 1 for x in range(n)])):
            add("verify", "hecke-dc", m, n, d, c, max_kazhdan=6)
    add("verify", "theta-sigma")
    for c in (CharVector.zero(2), CharVector((1, 2))):
        add("verify", "filtration", 1, 2, 2, c)
    return out


def _run_safe(cfg):
    try:
        return run_one(cfg)
    except duality.SizeCapExceeded as exc:
        return {"theorem": cfg["what"], "params": {}, "lhs_dim": None, "rhs_dim": None,
                "equal": False, "checks": [{"name": "size cap", "pass": False, "detail": str(exc)}],
                "elapsed_ms": 0}


def format_text(rep: dict) -> str:
    params = " ".join(f"{k}={v}" for k, v in rep["params"].items())
    status = "PASS" if rep["equal"] else "FAIL"
    head = f"{status} {rep['theorem']} {params}".rstrip()
    if rep["lhs_dim"] is not None:
        head += f"  (dims {rep['lhs_dim']} / {rep['rhs_dim']})"
    head += f"  [{rep['elapsed_ms']} ms]"
    lines = [head]
    for ch in rep["checks"]:
        mark = "ok" if ch["pass"] else "FAILED"
        lines.append(f"  {mark:6} {ch['name']}" + (f": {ch['detail']}" if ch["detail"] else ""))
    return "\n".join(lines)


def emit(reports: list, fmt: str, single: bool, stream) -> None:
    if fmt == "json":
        payload = reports[0] if single else reports
        stream.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        stream.write("\n".join(format_text(r) for r in reports) + "\n")
        if not single:
            npass = sum(r["equal"] for r in reports)
            stream.write(f"{npass}/{len(reports)} reports passed\n")


def _attach_values(argv: list) -> list:
    """Glue ``--c -1/3,2`` into ``--c=-1/3,2`` so argparse does not read a flag."""
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--c":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--c={nxt}")
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _attach_values(sys.argv[1:] if argv is None else list(argv))
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        cfg = resolve_config(ns)
        if cfg["group"] == "report":
            configs = suite_configs(cfg)
            if cfg["workers"] > 1:
                with ProcessPoolExecutor(cfg["workers"]) as pool:
                    reports = list(pool.map(_run_safe, configs))
            else:
                reports = [_run_safe(c) for c in configs]
            emit(reports, cfg["format"], False, stdout)
        else:
            reports = [run_one(cfg)]
            emit(reports, cfg["format"], True, stdout)
    except UsageError as exc:
        stderr.write(f"superdual: error: {exc}\n")
        return EXIT_USAGE
    except duality.SizeCapExceeded as exc:
        stderr.write(f"superdual: {exc}\n")
        return EXIT_CAP
    return EXIT_PASS if all(r["equal"] for r in reports) else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
