"""Command line interface: ``foldconfig {sizes,enumerate,count,sweep}``.

Exit codes: 0 success, 2 invalid input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import itertools
import json
import os
import sys
from collections import Counter
from typing import Iterable, List, Optional, TextIO

from .core import ClassDistribution, InvalidArgumentError, fold_sizes, partition_k_m
from .counting import count_configurations, sweep

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3


def read_labels(path: str) -> ClassDistribution:
    """Class distribution of a file holding one label per line.

    Classes are numbered in order of first appearance; blank lines are skipped.
    """
    with open(path, encoding="utf-8") as fh:
        labels = Counter(line.strip() for line in fh)
    labels.pop("", None)
    if not labels:
        raise InvalidArgumentError(f"{path}: no labels found")
    return ClassDistribution(labels.values())


def parse_classes(text: str) -> ClassDistribution:
    try:
        counts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidArgumentError(
            f"--classes expects comma-separated integers, got {text!r}"
        ) from None
    return ClassDistribution(counts)


def _distribution(args) -> ClassDistribution:
    if args.labels_file is not None:
        counts = read_labels(args.labels_file)
    else:
        counts = parse_classes(args.classes)
        if 0 in counts:
            empty = [i for i, c in enumerate(counts) if c == 0]
            print(f"warning: classes {empty} have no records", file=sys.stderr)
    return counts


@contextlib.contextmanager
def _sink(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def write_jsonl(configs: Iterable, out: TextIO) -> int:
    written = 0
    for config in configs:
        out.write(json.dumps({"folds": config}, separators=(",", ":")))
        out.write("\n")
        written += 1
    return written


def write_csv(configs: Iterable, out: TextIO, k: int, m: int) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([f"f{i}_c{j}" for i in range(k) for j in range(m)])
    written = 0
    for config in configs:
        writer.writerow([x for row in config for x in row])
        written += 1
    return written


def cmd_sizes(args) -> int:
    sizes = fold_sizes(args.n, args.k)
    print(",".join(map(str, sizes)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    counts = _distribution(args)
    sizes = fold_sizes(counts.total, args.k)
    configs = partition_k_m(sizes, counts)
    if args.limit is not None:
        if args.limit < 0:
            raise InvalidArgumentError("--limit must be non-negative")
        configs = itertools.islice(configs, args.limit)
    with _sink(args.out) as out:
        if args.format == "csv":
            written = write_csv(configs, out, len(sizes), len(counts))
        else:
            written = write_jsonl(configs, out)
    print(f"{written} configurations", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    counts = _distribution(args)
    print(count_configurations(fold_sizes(counts.total, args.k), counts))
    return EXIT_OK


def cmd_sweep(args) -> int:
    counts = _distribution(args)
    rows = sweep(counts, args.k_min, args.k_max)
    with _sink(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "sizes", "count", "elapsed_ms"])
        for row in rows:
            writer.writerow(
                [row.k, "|".join(map(str, row.sizes)), row.count, f"{row.elapsed_ms:.3f}"]
            )
    return EXIT_OK


def _add_source(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--classes", help="comma-separated class counts, e.g. 2,24,64")
    src.add_argument(
        "--labels-file", help="text file with one class label per line"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldconfig",
        description="Enumerate and count standardized k-fold configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sizes", help="print the fold sizes for N records and k folds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_sizes)

    p = sub.add_parser("enumerate", help="stream every standardized configuration")
    _add_source(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default="-", help="output path (default: stdout)")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="print the number of standardized configurations")
    _add_source(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sweep", help="configuration counts over a range of k")
    _add_source(p)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        # downstream reader went away (e.g. piped into head)
        with contextlib.suppress(OSError):
            sys.stdout = open(os.devnull, "w")
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
