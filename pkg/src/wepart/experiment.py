"""Join-coarseness experiment over random or enumerated cographs.

Per admitting graph: take the 2-homogeneous partition found by the cotree
pairing algorithm, sample nine more as images under random automorphisms
(a product of cotree generators raised to random powers), then record the
cell count of the join of every nonempty subset of the ten.  Graphs with
no fixed-point-free involution are discarded and counted: the random
source keeps sampling until it has `count` admitting graphs; the
enumerated source simply skips the non-admitting members.

Determinism: all randomness flows from one master seed through splitmix64
derivation into per-graph Mersenne Twister streams (independent streams
for graph generation, partition sampling, and verification sampling), so
identical seeds give byte-identical CSV output regardless of platform.
Duplicate sampled partitions are kept; the subset lattice ranges over the
ten slots, not over distinct partitions.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence, Union

from .cotrees import (
    Cotree,
    aut_generators,
    enumerate_connected_cotrees,
    has_nice_automorphism,
    nice_automorphism,
    pairs_partition,
    random_cotree,
    reconstruct,
)
from .equitability import is_weight_equitable
from .errors import NoHomogeneousPartition, OddOrder, SeedRequired, WepartError
from .graphs import Graph, emit_graph6
from .partitions import Partition, apply_automorphism, join
from .perms import compose, identity, order, power
from .spectral import perron

DEFAULT_TOL = 1e-8
PARTITIONS_PER_GRAPH = 10
RNG_NAME = "python-random-mt19937"

_MASK64 = (1 << 64) - 1


def _derive(master: int, *salts: int) -> int:
    """Splitmix64-style seed derivation, pure 64-bit integer arithmetic."""
    x = master & _MASK64
    for s in salts:
        x = (x ^ ((s + 1) * 0x9E3779B97F4A7C15)) & _MASK64
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
        x ^= x >> 31
    return x


@dataclass(frozen=True)
class ExperimentRecord:
    graph_id: str          # graph6 encoding; the row is self-describing
    n: int
    k: int                 # number of partitions joined, popcount of subset_id
    subset_id: int         # bitmask over the ten partition slots, 1..1023
    cells: int
    seed: int              # per-graph sampling seed


@dataclass(frozen=True)
class RandomSource:
    count: int
    n: int


@dataclass(frozen=True)
class EnumeratedSource:
    n: int


Source = Union[RandomSource, EnumeratedSource]


def sample_partitions(tree: Cotree, rng: random.Random) -> list[Partition]:
    """The ten 2-homogeneous partitions used per graph.

    Slot 0 is the pairing-algorithm partition; slots 1..9 are its images
    under gamma = prod g_i^{m_i} over the cotree generators, m_i uniform
    in 1..ord(g_i), composed in generator order.
    """
    if not has_nice_automorphism(tree):
        raise NoHomogeneousPartition(
            "graph admits no fixed-point-free involution")
    p0 = pairs_partition(nice_automorphism(tree))
    gens = aut_generators(tree)
    orders = [order(g) for g in gens]
    parts = [p0]
    for _ in range(PARTITIONS_PER_GRAPH - 1):
        gamma = identity(tree.n)
        for gen, o in zip(gens, orders):
            m = rng.randint(1, o)
            gamma = compose(power(gen, m), gamma)
        parts.append(apply_automorphism(p0, gamma))
    return parts


def subset_join(partitions: Sequence[Partition], subset_id: int) -> Partition:
    """Join of the partitions selected by the bits of subset_id."""
    result: Optional[Partition] = None
    for j in range(len(partitions)):
        if subset_id >> j & 1:
            result = partitions[j] if result is None else join(result, partitions[j])
    if result is None:
        raise WepartError("empty subset has no join")
    return result


def verify_record(graph: Graph, partitions: Sequence[Partition],
                  subset_id: int, tol: float = DEFAULT_TOL) -> bool:
    """Whether the subset's join is weight-equitable (the closure property)."""
    nu = perron(graph).nu
    return is_weight_equitable(graph, nu, subset_join(partitions, subset_id), tol)


MAX_REJECTIONS = 10_000


def _admitting_trees(source: Source, seed: int,
                     stats: dict) -> Iterator[Cotree]:
    """Cotrees that pass the pairing test, with discards counted."""
    if isinstance(source, EnumeratedSource):
        for tree in enumerate_connected_cotrees(source.n):
            if has_nice_automorphism(tree):
                yield tree
            else:
                stats["skipped"] += 1
        return
    if source.n % 2 == 1:
        raise OddOrder(
            f"n = {source.n} is odd; no graph admits a 2-homogeneous partition")
    for i in range(source.count):
        for attempt in range(MAX_REJECTIONS):
            tree = random_cotree(source.n, _derive(seed, 0, i, attempt))
            if has_nice_automorphism(tree):
                yield tree
                break
            stats["skipped"] += 1
        else:
            raise WepartError(
                f"no admitting cograph on {source.n} vertices found in "
                f"{MAX_REJECTIONS} attempts")


def run_experiment(source: Source, seed: Optional[int], *,
                   tol: float = DEFAULT_TOL, verify_fraction: float = 0.1,
                   stats: Optional[dict] = None) -> Iterator[ExperimentRecord]:
    """Stream of records: one per (admitting graph, nonempty subset).

    Spot-checks a verify_fraction of the joins against the full
    weight-equitability test and fails loudly on any miss.
    """
    if seed is None:
        raise SeedRequired("the experiment samples partitions; pass a seed")
    if not isinstance(source, (RandomSource, EnumeratedSource)):
        raise WepartError(f"unknown experiment source {source!r}")
    if stats is None:
        stats = {}
    stats.update(admitted=0, skipped=0, verified=0)
    for i, tree in enumerate(_admitting_trees(source, seed, stats)):
        stats["admitted"] += 1
        graph = reconstruct(tree)
        graph_id = emit_graph6(graph)
        sample_seed = _derive(seed, 1, i)
        parts = sample_partitions(tree, random.Random(sample_seed))
        verify_rng = random.Random(_derive(seed, 2, i))
        nu = perron(graph).nu if verify_fraction > 0 else None
        joins: list[Optional[Partition]] = [None] * (1 << PARTITIONS_PER_GRAPH)
        for sid in range(1, 1 << PARTITIONS_PER_GRAPH):
            low = sid & -sid
            rest = sid ^ low
            part = parts[low.bit_length() - 1]
            joined = part if rest == 0 else join(joins[rest], part)
            joins[sid] = joined
            if verify_fraction > 0 and verify_rng.random() < verify_fraction:
                stats["verified"] += 1
                if not is_weight_equitable(graph, nu, joined, tol):
                    raise WepartError(
                        f"join of subset {sid:#x} on {graph_id} failed "
                        "the weight-equitability re-check")
            yield ExperimentRecord(graph_id, graph.n, bin(sid).count("1"),
                                   sid, joined.m, sample_seed)


CSV_HEADER = ("graph_id", "n", "k", "subset_id", "cells", "seed")


def write_records(records: Sequence[ExperimentRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow((r.graph_id, r.n, r.k, r.subset_id, r.cells, r.seed))


def histogram(records: Sequence[ExperimentRecord], admitted: int
              ) -> dict[tuple[int, int], float]:
    """Frequency of each (k, cells), normalized per k.

    Each admitting graph contributes C(10, k) subsets of size k, so the
    counts are divided by admitted * C(10, k) and each k-column sums to 1.
    """
    counts: dict[tuple[int, int], int] = {}
    for r in records:
        counts[(r.k, r.cells)] = counts.get((r.k, r.cells), 0) + 1
    return {
        key: count / (admitted * comb(PARTITIONS_PER_GRAPH, key[0]))
        for key, count in sorted(counts.items())
    }


def write_histogram(records: Sequence[ExperimentRecord], admitted: int,
                    path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("k", "cells", "frequency"))
        for (k, cells), freq in histogram(records, admitted).items():
            writer.writerow((k, cells, f"{freq:.12g}"))


def write_metadata(path, *, source: Source, seed: int, stats: dict,
                   record_count: int, tol: float,
                   verify_fraction: float) -> None:
    if isinstance(source, RandomSource):
        desc = {"kind": "random", "count": source.count, "n": source.n}
    else:
        desc = {"kind": "enumerated", "n": source.n}
    payload = {
        "rng": RNG_NAME,
        "seed": seed,
        "source": desc,
        "tol": tol,
        "verify_fraction": verify_fraction,
        "records": record_count,
        "graphs_admitted": stats.get("admitted", 0),
        "graphs_skipped": stats.get("skipped", 0),
        "joins_verified": stats.get("verified", 0),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
