"""Admissible orderings, packet flips, commutation classes, and flip posets.

A total ordering of a ground set is admissible when its restriction to every
packet agrees with the packet order or its reverse.  Packet flips reverse the
comparable components of one packet in place; quotienting by swaps of adjacent
commuting elements and closing under flips yields a graded poset with the
inversion set as rank function.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .core import (
    Packet,
    UnsupportedLevelError,
    _level_elements,
    enumerate_A,
    enumerate_B,
    format_element,
    packet_B,
    parse_element,
    standard_key,
)


class InadmissibleOrderError(ValueError):
    """Raised when an operation requires an admissible ordering."""


class FlipError(ValueError):
    """Raised when flipping an element outside the candidate set."""


class PosetOverflowError(RuntimeError):
    """Raised when a poset search exceeds the node budget."""


DEFAULT_MAX_NODES = 10 ** 6


def element_key(e):
    """Deterministic sort key for ground elements of either family."""
    if isinstance(e, tuple):
        return e
    return standard_key(e)


def ground_set(family: str, n: int, k: int) -> list:
    if family == "A":
        return enumerate_A(n, k)
    if family == "B":
        return enumerate_B(n, k)
    raise ValueError(f"unknown family {family!r}")


def _upper_elements(family: str, n: int, k: int) -> list:
    """Level-(k+1) elements, the flip labels over level k."""
    if family == "A":
        if k + 1 > n:
            return []
        return enumerate_A(n, k + 1)
    if k + 1 <= 3:
        return enumerate_B(n, k + 1)
    if k + 1 == 4:
        return sorted(_level_elements(n, 4), key=lambda e: (e.kind, e.entries))
    raise UnsupportedLevelError(f"no packets above level {k}")


@lru_cache(maxsize=None)
def _packet_table(family: str, n: int, k: int) -> tuple[tuple[object, Packet], ...]:
    """(K, packet of K) for every level-(k+1) element K, in label order."""
    out = []
    for K in _upper_elements(family, n, k):
        if family == "A":
            chain = tuple(sorted(itertools.combinations(K, k)))
            out.append((K, Packet(frozenset(chain), (chain,))))
        else:
            out.append((K, packet_B(K)))
    return tuple(out)


@dataclass(frozen=True)
class TotalOrder:
    """A total ordering of a full ground set, stored as a sequence."""

    family: str
    n: int
    k: int
    seq: tuple

    def __post_init__(self):
        expected = ground_set(self.family, self.n, self.k)
        if len(self.seq) != len(expected) or set(self.seq) != set(expected):
            raise ValueError("sequence is not a permutation of the ground set")

    @cached_property
    def positions(self) -> dict:
        return {e: i for i, e in enumerate(self.seq)}

    def reverse(self) -> "TotalOrder":
        return TotalOrder(self.family, self.n, self.k, self.seq[::-1])

    def __str__(self) -> str:
        return "(" + " ".join(format_element(e) for e in self.seq) + ")"


def rho_min(family: str, n: int, k: int) -> TotalOrder:
    return TotalOrder(family, n, k, tuple(ground_set(family, n, k)))


def rho_max(family: str, n: int, k: int) -> TotalOrder:
    return rho_min(family, n, k).reverse()


def _packet_orientations(rho: TotalOrder) -> dict:
    """Map each level-(k+1) element to True when its packet is fully reversed.

    Raises InadmissibleOrderError when some packet is neither in packet order
    nor fully reversed (components must agree on the orientation).
    """
    pos = rho.positions
    out = {}
    for K, packet in _packet_table(rho.family, rho.n, rho.k):
        orientation = None
        for chain in packet.components:
            for a, b in zip(chain, chain[1:]):
                forward = pos[a] < pos[b]
                if orientation is None:
                    orientation = forward
                elif orientation != forward:
                    raise InadmissibleOrderError(
                        f"packet of {format_element(K)} is inconsistently ordered")
        out[K] = not orientation
    return out


def is_admissible(rho: TotalOrder) -> bool:
    """Whether every packet appears in packet order or fully reversed."""
    try:
        _packet_orientations(rho)
    except InadmissibleOrderError:
        return False
    return True


def inversion_set(rho: TotalOrder) -> frozenset:
    """The level-(k+1) elements whose packet appears fully reversed."""
    return frozenset(K for K, rev in _packet_orientations(rho).items() if rev)


def flip_candidates(rho: TotalOrder) -> frozenset:
    """Elements whose packet components all occupy consecutive positions."""
    pos = rho.positions
    out = []
    for K, packet in _packet_table(rho.family, rho.n, rho.k):
        ok = True
        for chain in packet.components:
            ps = [pos[e] for e in chain]
            if max(ps) - min(ps) != len(ps) - 1:
                ok = False
                break
        if ok:
            out.append(K)
    return frozenset(out)


def packet_flip(rho: TotalOrder, K) -> TotalOrder:
    """Reverse each comparable component of K's packet in place."""
    pos = rho.positions
    packet = _packet_of(rho.family, rho.n, rho.k, K)
    seq = list(rho.seq)
    for chain in packet.components:
        ps = sorted(pos[e] for e in chain)
        if ps[-1] - ps[0] != len(ps) - 1:
            raise FlipError(f"{format_element(K)} is not flippable here")
        seq[ps[0]:ps[-1] + 1] = reversed(seq[ps[0]:ps[-1] + 1])
    return TotalOrder(rho.family, rho.n, rho.k, tuple(seq))


def _packet_of(family: str, n: int, k: int, K) -> Packet:
    for K2, packet in _packet_table(family, n, k):
        if K2 == K:
            return packet
    raise ValueError(f"{format_element(K)} is not a level-{k + 1} element")


@lru_cache(maxsize=None)
def _noncommuting_pairs(family: str, n: int, k: int) -> frozenset:
    """Unordered pairs lying in a common component of some packet."""
    pairs = set()
    for _K, packet in _packet_table(family, n, k):
        for chain in packet.components:
            for a, b in itertools.combinations(chain, 2):
                pairs.add(frozenset((a, b)))
    return frozenset(pairs)


def commutes(a, b, family: str, n: int, k: int) -> bool:
    """Whether a and b are incomparable in every packet containing both."""
    if a == b:
        raise ValueError("commutation needs two distinct elements")
    return frozenset((a, b)) not in _noncommuting_pairs(family, n, k)


# ---------------------------------------------------------------------------
# commutation classes and canonical forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderClass:
    """A commutation class, held by its canonical representative."""

    canon: TotalOrder


def canonical_form(rho: TotalOrder) -> OrderClass:
    """Lexicographically least member of the commutation class of rho.

    Greedy least-available linearization of the dependence order (relative
    order of every non-commuting pair), with availability resolved by the
    standard order on ground elements.
    """
    nc = _noncommuting_pairs(rho.family, rho.n, rho.k)
    seq = rho.seq
    succs: dict = {e: [] for e in seq}
    indeg = {e: 0 for e in seq}
    for i, a in enumerate(seq):
        for b in seq[i + 1:]:
            if frozenset((a, b)) in nc:
                succs[a].append(b)
                indeg[b] += 1
    avail = sorted((e for e in seq if indeg[e] == 0), key=element_key)
    out = []
    while avail:
        e = avail.pop(0)
        out.append(e)
        fresh = []
        for b in succs[e]:
            indeg[b] -= 1
            if indeg[b] == 0:
                fresh.append(b)
        if fresh:
            avail = sorted(avail + fresh, key=element_key)
    return OrderClass(TotalOrder(rho.family, rho.n, rho.k, tuple(out)))


def class_members(rho: TotalOrder) -> list[TotalOrder]:
    """Every member of the commutation class, by closure under swaps."""
    return [TotalOrder(rho.family, rho.n, rho.k, s)
            for s in _class_seqs(rho.family, rho.n, rho.k, rho.seq)]


def _class_seqs(family, n, k, seq) -> list[tuple]:
    nc = _noncommuting_pairs(family, n, k)
    seen = {seq}
    queue = deque([seq])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            if frozenset((cur[i], cur[i + 1])) not in nc:
                nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return sorted(seen, key=lambda s: tuple(element_key(e) for e in s))


def class_swap_path(src: TotalOrder, dst: TotalOrder) -> list[tuple]:
    """Adjacent commuting pairs swapping src into dst, in application order."""
    nc = _noncommuting_pairs(src.family, src.n, src.k)
    start, goal = src.seq, dst.seq
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            break
        for i in range(len(cur) - 1):
            if frozenset((cur[i], cur[i + 1])) not in nc:
                nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2:]
                if nxt not in parent:
                    parent[nxt] = (cur, (cur[i], cur[i + 1]))
                    queue.append(nxt)
    if goal not in parent:
        raise ValueError("orderings are not in the same commutation class")
    path = []
    node = goal
    while parent[node] is not None:
        node, pair = parent[node]
        path.append(pair)
    return path[::-1]


def class_flip_candidates(r: OrderClass) -> frozenset:
    """Union of flip candidates over the whole commutation class."""
    out: set = set()
    for member in class_members(r.canon):
        out |= flip_candidates(member)
    return frozenset(out)


# ---------------------------------------------------------------------------
# the flip poset
# ---------------------------------------------------------------------------

@dataclass
class PosetNode:
    canon: TotalOrder
    inv: frozenset
    rank: int


@dataclass
class BruhatPoset:
    """Flip poset on commutation classes, graded by inversion-set size."""

    family: str
    n: int
    k: int
    nodes: dict = field(default_factory=dict)     # canon seq -> PosetNode
    edges: list = field(default_factory=list)     # (src seq, dst seq, label)
    min_key: tuple = ()

    @property
    def full_inv(self) -> frozenset:
        return frozenset(K for K, _ in _packet_table(self.family, self.n, self.k))

    def out_edges(self, key):
        return [e for e in self.edges if e[0] == key]

    def is_less(self, src_key, dst_key) -> bool:
        """Strict order via reachability in the flip DAG."""
        if src_key == dst_key:
            return False
        seen = {src_key}
        queue = deque([src_key])
        succ: dict = {}
        for s, d, _ in self.edges:
            succ.setdefault(s, []).append(d)
        while queue:
            cur = queue.popleft()
            for nxt in succ.get(cur, ()):
                if nxt == dst_key:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return False


def build_poset(family: str, n: int, k: int,
                max_nodes: int | None = None) -> BruhatPoset:
    """BFS closure of packet flips starting from the minimal class.

    Nodes are keyed by canonical form; every edge applies one flip at a label
    outside the inversion set, raising rank by one.
    """
    if family == "A":
        if not (1 <= k <= n):
            raise ValueError(f"type A poset needs 1 <= k <= n, got k={k}, n={n}")
    elif family == "B":
        if k not in (1, 2):
            raise UnsupportedLevelError(
                f"type B flip poset is defined for k in {{1, 2}}, got k={k}")
    else:
        raise ValueError(f"unknown family {family!r}")
    if max_nodes is None:
        max_nodes = int(os.environ.get("BRUHAT_MAX_NODES", DEFAULT_MAX_NODES))

    poset = BruhatPoset(family, n, k)
    start = canonical_form(rho_min(family, n, k)).canon
    poset.min_key = start.seq
    poset.nodes[start.seq] = PosetNode(start, inversion_set(start), 0)
    queue = deque([start.seq])
    while queue:
        key = queue.popleft()
        node = poset.nodes[key]
        members = class_members(node.canon)
        candidates: set = set()
        for m in members:
            candidates |= flip_candidates(m)
        for K in sorted(candidates - node.inv, key=element_key):
            member = next(m for m in members if K in flip_candidates(m))
            flipped = canonical_form(packet_flip(member, K)).canon
            if flipped.seq not in poset.nodes:
                if len(poset.nodes) >= max_nodes:
                    raise PosetOverflowError(
                        f"poset exceeded {max_nodes} nodes (BRUHAT_MAX_NODES)")
                poset.nodes[flipped.seq] = PosetNode(
                    flipped, node.inv | {K}, node.rank + 1)
                queue.append(flipped.seq)
            poset.edges.append((key, flipped.seq, K))
    return poset


@dataclass(frozen=True)
class ExtremaReport:
    unique_min: bool
    unique_max: bool
    graded: bool


def check_extrema(p: BruhatPoset) -> ExtremaReport:
    """Unique minimum, unique maximum, and gradedness of the flip poset."""
    full = p.full_inv
    mins = [k for k, nd in p.nodes.items() if not nd.inv]
    maxs = [k for k, nd in p.nodes.items() if nd.inv == full]
    has_out = {k: False for k in p.nodes}
    for s, _d, _K in p.edges:
        has_out[s] = True
    graded = all(
        nd.rank == len(nd.inv) and (nd.inv == full or has_out[key])
        for key, nd in p.nodes.items())
    return ExtremaReport(len(mins) == 1, len(maxs) == 1, graded)


def maximal_chains(p: BruhatPoset) -> list[tuple]:
    """Edge-label sequences of all minimum-to-maximum paths."""
    rep = check_extrema(p)
    if not (rep.unique_min and rep.unique_max):
        raise ValueError("maximal chains need unique extrema")
    full = p.full_inv
    succ: dict = {}
    for s, d, K in p.edges:
        succ.setdefault(s, []).append((element_key(K), d, K))
    for v in succ.values():
        v.sort(key=lambda t: t[0])
    chains = []
    stack = [(p.min_key, ())]
    while stack:
        key, labels = stack.pop()
        if p.nodes[key].inv == full:
            chains.append(labels)
            continue
        for _sk, dst, K in reversed(succ.get(key, ())):
            stack.append((dst, labels + (K,)))
    return chains


def enumerate_admissible(family: str, n: int, k: int) -> list[TotalOrder]:
    """All admissible orderings, by backtracking over packet orientations."""
    ground = ground_set(family, n, k)
    partners: dict = {e: [] for e in ground}
    for pid, (_K, packet) in enumerate(_packet_table(family, n, k)):
        for chain in packet.components:
            for a, b in itertools.combinations(chain, 2):
                partners[a].append((b, pid, True))   # a precedes b in packet
                partners[b].append((a, pid, False))
    out = []
    placed: list = []
    placed_set: set = set()
    orient: dict = {}

    def extend():
        if len(placed) == len(ground):
            out.append(TotalOrder(family, n, k, tuple(placed)))
            return
        for e in ground:
            if e in placed_set:
                continue
            fixed = []
            ok = True
            for other, pid, e_first in partners[e]:
                if other not in placed_set:
                    continue
                # other is already placed, so packet pid is forward only if
                # the packet order puts other before e
                forward = not e_first
                if pid in orient:
                    if orient[pid] != forward:
                        ok = False
                        break
                else:
                    orient[pid] = forward
                    fixed.append(pid)
            if ok:
                placed.append(e)
                placed_set.add(e)
                extend()
                placed.pop()
                placed_set.remove(e)
            for pid in fixed:
                del orient[pid]

    extend()
    return out


def admissible_orderings_filter(family: str, n: int, k: int) -> list[TotalOrder]:
    """Permutation-filter oracle for enumerate_admissible (tiny grounds only)."""
    ground = ground_set(family, n, k)
    out = []
    for perm in itertools.permutations(ground):
        cand = TotalOrder(family, n, k, perm)
        if is_admissible(cand):
            out.append(cand)
    return out


def chains_bijection_check(p: BruhatPoset) -> bool:
    """Chain labels are admissible level-(k+1) orders, one chain per order."""
    chains = maximal_chains(p)
    upper = _upper_elements(p.family, p.n, p.k)
    orders = set()
    for labels in chains:
        if sorted(labels, key=element_key) != sorted(upper, key=element_key):
            return False
        cand = TotalOrder(p.family, p.n, p.k + 1, labels)
        if not is_admissible(cand):
            return False
        orders.add(labels)
    if len(orders) != len(chains):
        return False
    admissible = {t.seq for t in enumerate_admissible(p.family, p.n, p.k + 1)}
    return orders == admissible


def inv_injectivity_check(p: BruhatPoset) -> bool:
    """Distinct classes carry distinct inversion sets."""
    seen: dict = {}
    for key, nd in p.nodes.items():
        if nd.inv in seen.values():
            return False
        seen[key] = nd.inv
    return len(set(seen.values())) == len(p.nodes)


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def _node_ids(p: BruhatPoset) -> dict:
    return {key: i for i, key in enumerate(p.nodes)}


def poset_to_json_obj(p: BruhatPoset) -> dict:
    ids = _node_ids(p)
    return {
        "family": p.family,
        "n": p.n,
        "k": p.k,
        "nodes": [
            {
                "id": ids[key],
                "canon": [format_element(e) for e in nd.canon.seq],
                "inv": sorted((format_element(K) for K in nd.inv)),
                "rank": nd.rank,
            }
            for key, nd in p.nodes.items()
        ],
        "edges": [
            {"src": ids[s], "dst": ids[d], "label": format_element(K)}
            for s, d, K in p.edges
        ],
    }


def poset_to_json(p: BruhatPoset) -> str:
    return json.dumps(poset_to_json_obj(p), indent=2)


def poset_from_json_obj(obj: dict) -> dict:
    """Parse an exported poset back into comparable node and edge sets."""
    nodes = {}
    for nd in obj["nodes"]:
        canon = tuple(parse_element(t) for t in nd["canon"])
        inv = frozenset(parse_element(t) for t in nd["inv"])
        nodes[nd["id"]] = (canon, inv, nd["rank"])
    return {
        "family": obj["family"],
        "n": obj["n"],
        "k": obj["k"],
        "nodes": frozenset(nodes.values()),
        "edges": frozenset((nodes[e["src"]][0], nodes[e["dst"]][0],
                            parse_element(e["label"])) for e in obj["edges"]),
    }


def poset_comparable(p: BruhatPoset) -> dict:
    """Same canonical shape as poset_from_json_obj, straight from a poset."""
    return {
        "family": p.family,
        "n": p.n,
        "k": p.k,
        "nodes": frozenset((nd.canon.seq, nd.inv, nd.rank) for nd in p.nodes.values()),
        "edges": frozenset((s, d, K) for s, d, K in p.edges),
    }


def poset_to_dot(p: BruhatPoset) -> str:
    """DOT text: nodes labeled by rank and canonical sequence, edges by label."""
    ids = _node_ids(p)
    lines = ["digraph bruhat {", "  rankdir=BT;"]
    for key, nd in p.nodes.items():
        seq = " ".join(format_element(e) for e in nd.canon.seq)
        lines.append(f'  n{ids[key]} [label="rank {nd.rank}: {seq}"];')
    for s, d, K in p.edges:
        lines.append(f'  n{ids[s]} -> n{ids[d]} [label="{format_element(K)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
