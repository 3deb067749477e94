"""Command-line front end.

    lcaf --algo {oracle|radix|batched} [--k INT] [--network {batcher|pratt}]
         [--json] [--all-occurrences] [--shadow-check] [--inline] FILE_A FILE_B
    lcaf bench --sizes 64,128,256 --sigmas 2,4,16 --algos radix,batched
               --repeats 3 --seed 42 [--out results.csv]

Exit status: 0 on success (a zero-length answer included), 2 for unreadable
or empty input, 3 for invalid option combinations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .batched import BatchConfig, default_k, lcaf_batched
from .oracle import lcaf_bruteforce
from .radix import lcaf_radix
from .result import LcafResult
from .text_model import EmptyInput, RemappedText, remap_alphabet

ALGOS = ("oracle", "radix", "batched")
NETWORKS = ("batcher", "pratt")
WITNESS_CAP = 16
BENCH_HEADER = ["algo", "n", "sigma", "k", "comparisons", "comparator_invocations",
                "rebuilds", "elapsed_ms", "lcaf_length"]

EXIT_OK, EXIT_INPUT, EXIT_OPTIONS = 0, 2, 3


class OptionError(ValueError):
    pass


@dataclass
class RunConfig:
    inputs: Sequence
    algo: str = "radix"
    k: Optional[int] = None
    network: Optional[str] = None
    output: str = "text"
    all_occurrences: bool = False
    shadow_check: bool = False
    inline: bool = False
    max_witnesses: int = WITNESS_CAP
    seed: int = 0

    def validate(self) -> None:
        if self.algo not in ALGOS:
            raise OptionError(f"unknown algorithm {self.algo!r}")
        if self.algo != "batched":
            for name, value in (("--k", self.k), ("--network", self.network)):
                if value is not None:
                    raise OptionError(f"{name} only applies to --algo batched")
            if self.shadow_check:
                raise OptionError("--shadow-check only applies to --algo batched")
        if self.k is not None and self.k < 1:
            raise OptionError("--k must be >= 1")
        if self.network is not None and self.network not in NETWORKS:
            raise OptionError(f"unknown network {self.network!r}")
        if self.max_witnesses < 0:
            raise OptionError("--max-witnesses must be >= 0")


def solve(algo: str, a: RemappedText, b: RemappedText, k: Optional[int] = None,
          network: Optional[str] = None, shadow_check: bool = False,
          full_sweep: bool = False) -> LcafResult:
    if algo == "oracle":
        return lcaf_bruteforce(a, b)
    if algo == "radix":
        return lcaf_radix(a, b, full_sweep=full_sweep)
    config = BatchConfig(k or default_k(a.sigma), network or "batcher")
    return lcaf_batched(a, b, config, shadow_check=shadow_check, full_sweep=full_sweep)


def _read_inputs(config: RunConfig):
    if config.inline:
        return [s.encode() if isinstance(s, str) else bytes(s) for s in config.inputs]
    raws = []
    for path in config.inputs:
        with open(path, "rb") as fh:
            raws.append(fh.read())
    return raws


def build_record(config: RunConfig, a: RemappedText, b: RemappedText,
                 result: LcafResult, elapsed_ms: float) -> dict:
    record = {
        "algorithm": config.algo,
        "lcaf_length": result.length,
        "witnesses": [list(w) for w in result.witnesses[:config.max_witnesses]],
        "witnesses_total": len(result.witnesses),
        "sigma": a.sigma,
        "len_a": a.n,
        "len_b": b.n,
        "counters": dict(sorted(result.counters.items())),
        "elapsed_ms": round(elapsed_ms, 3),
    }
    if config.algo == "batched":
        record["k"] = config.k or default_k(a.sigma)
        record["network"] = config.network or "batcher"
    if config.all_occurrences:
        record["occurrences"] = [
            {"length": o.length, "starts_a": o.starts_a, "starts_b": o.starts_b}
            for o in result.occurrences
        ]
    return record


def format_text(record: dict) -> str:
    lines = [
        f"algorithm     {record['algorithm']}",
        f"sigma         {record['sigma']}",
        f"len_a         {record['len_a']}",
        f"len_b         {record['len_b']}",
    ]
    if "k" in record:
        lines.append(f"k             {record['k']}")
        lines.append(f"network       {record['network']}")
    lines.append(f"lcaf_length   {record['lcaf_length']}")
    shown = record["witnesses"]
    lines.append(f"witnesses     {len(shown)} of {record['witnesses_total']} (start_a start_b length)")
    lines.extend(f"  {sa} {sb} {ln}" for sa, sb, ln in shown)
    if "occurrences" in record:
        lines.append(f"occurrences   {len(record['occurrences'])} classes")
        for occ in record["occurrences"]:
            lines.append(f"  A {' '.join(map(str, occ['starts_a']))} | B {' '.join(map(str, occ['starts_b']))}")
    lines.append("counters")
    lines.extend(f"  {name:<24}{value}" for name, value in record["counters"].items())
    lines.append(f"elapsed_ms    {record['elapsed_ms']}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config.validate()
    except OptionError as exc:
        print(f"lcaf: {exc}", file=err)
        return EXIT_OPTIONS
    try:
        raw_a, raw_b = _read_inputs(config)
        a, b, _ = remap_alphabet(raw_a, raw_b)
    except (OSError, EmptyInput) as exc:
        print(f"lcaf: {exc}", file=err)
        return EXIT_INPUT
    t0 = time.perf_counter()
    result = solve(config.algo, a, b, config.k, config.network, config.shadow_check)
    elapsed_ms = (time.perf_counter() - t0) * 1000
    record = build_record(config, a, b, result, elapsed_ms)
    if config.output == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(format_text(record))
    return EXIT_OK


def workload(seed: int, n: int, sigma: int, rep: int):
    """Seeded pair of uniform random byte strings over `sigma` values."""
    rng = random.Random(f"{seed}/{n}/{sigma}/{rep}")
    a = bytes(rng.randrange(sigma) for _ in range(n))
    b = bytes(rng.randrange(sigma) for _ in range(n))
    return a, b


def bench(algos: List[str], sizes: List[int], sigmas: List[int], repeats: int = 1,
          seed: int = 0, k: Optional[int] = None, network: Optional[str] = None,
          full_sweep: bool = True) -> List[dict]:
    if not sizes or not sigmas:
        raise OptionError("--sizes and --sigmas must be non-empty")
    if not algos:
        raise OptionError("--algos must be non-empty")
    if repeats < 1:
        raise OptionError("--repeats must be >= 1")
    for algo in algos:
        if algo not in ALGOS:
            raise OptionError(f"unknown algorithm {algo!r}")
    if any(n < 1 for n in sizes):
        raise OptionError("sizes must be >= 1")
    if any(not 1 <= s <= 256 for s in sigmas):
        raise OptionError("sigmas must lie in 1..256")
    if k is not None and k < 1:
        raise OptionError("--k must be >= 1")
    if network is not None and network not in NETWORKS:
        raise OptionError(f"unknown network {network!r}")

    rows = []
    for n in sizes:
        for sigma in sigmas:
            for rep in range(repeats):
                a, b, _ = remap_alphabet(*workload(seed, n, sigma, rep))
                for algo in algos:
                    t0 = time.perf_counter()
                    res = solve(algo, a, b, k, network, full_sweep=full_sweep)
                    elapsed = (time.perf_counter() - t0) * 1000
                    c = res.counters
                    rows.append({
                        "algo": algo,
                        "n": n,
                        "sigma": sigma,
                        "k": (k or default_k(a.sigma)) if algo == "batched" else "",
                        "comparisons": c.get("comparisons", c.get("probes", 0)),
                        "comparator_invocations": c.get("comparator_invocations", 0),
                        "rebuilds": c.get("rebuilds", 0),
                        "elapsed_ms": f"{elapsed:.3f}",
                        "lcaf_length": res.length,
                    })
    rows.sort(key=lambda r: (r["algo"], r["n"], r["sigma"], str(r["k"])))
    return rows


def rows_to_csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _run_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcaf", description="Longest common Abelian factor of two byte strings.")
    p.add_argument("--algo", choices=ALGOS, default="radix")
    p.add_argument("--k", type=int, default=None, help="lengths per batch (batched only; default ceil(sqrt(sigma)))")
    p.add_argument("--network", choices=NETWORKS, default=None, help="oblivious sort (batched only; default batcher)")
    p.add_argument("--json", action="store_true", help="emit one JSON record")
    p.add_argument("--all-occurrences", action="store_true", help="report every matching class at the answer length")
    p.add_argument("--shadow-check", action="store_true", help="recheck every batched comparison directly")
    p.add_argument("--inline", action="store_true", help="treat FILE_A/FILE_B as literal strings")
    p.add_argument("--max-witnesses", type=int, default=WITNESS_CAP)
    p.add_argument("file_a", metavar="FILE_A")
    p.add_argument("file_b", metavar="FILE_B")
    return p


def _bench_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcaf bench", description="Cost matrix over seeded random workloads.")
    p.add_argument("--sizes", type=_int_list, default=[64, 128, 256])
    p.add_argument("--sigmas", type=_int_list, default=[2, 4, 16])
    p.add_argument("--algos", type=lambda s: [x for x in s.split(",") if x], default=["radix", "batched"])
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--network", default=None)
    p.add_argument("--early-exit", action="store_true",
                   help="stop at the first matching length instead of sweeping every length")
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "bench":
        args = _bench_parser().parse_args(argv[1:])
        try:
            rows = bench(args.algos, args.sizes, args.sigmas, args.repeats, args.seed,
                         args.k, args.network, full_sweep=not args.early_exit)
        except OptionError as exc:
            print(f"lcaf bench: {exc}", file=sys.stderr)
            return EXIT_OPTIONS
        text = rows_to_csv(rows)
        if args.out:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    args = _run_parser().parse_args(argv)
    config = RunConfig(
        inputs=(args.file_a, args.file_b),
        algo=args.algo,
        k=args.k,
        network=args.network,
        output="json" if args.json else "text",
        all_occurrences=args.all_occurrences,
        shadow_check=args.shadow_check,
        inline=args.inline,
        max_witnesses=args.max_witnesses,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
