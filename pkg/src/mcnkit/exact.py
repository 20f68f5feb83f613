"""Exhaustive optimal play for the game and its subgames.

Every level enumerates its feasible moves in canonical order (size first,
then lexicographic) and keeps the first strict improvement, so results are
deterministic.  Nested levels use alpha-beta style cutoffs; a cutoff only
fires when the parent could not pick the move anyway, so values and
witnesses are the same as a plain exhaustive search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Instance, induced_subgraph
from .propagation import StrategyTriple

DEFAULT_MAX_PLAYS = 10**7


class SearchTooLarge(RuntimeError):
    """The search would need more plays than the configured bound."""

    def __init__(self, limit: int):
        super().__init__(f"instance too large for exact solve (more than {limit} plays)")
        self.limit = limit


@dataclass(frozen=True)
class GameValue:
    value: int
    D: tuple[int, ...] = ()
    I: tuple[int, ...] = ()
    P: tuple[int, ...] = ()
    plays: int = 0

    @property
    def witness(self) -> StrategyTriple:
        return StrategyTriple(self.D, self.I, self.P)


def enumerate_budget_subsets(costs: Sequence[int], candidates: Iterable[int],
                             budget: int) -> Iterator[tuple[int, ...]]:
    """Yield every subset of ``candidates`` whose cost fits ``budget``.

    Order: by size, then lexicographically; the empty set comes first.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    cand = sorted(v for v in set(candidates) if costs[v] <= budget)
    m = len(cand)
    # cheapest[i][r]: smallest total cost of r items taken from cand[i:]
    cheapest = []
    for i in range(m + 1):
        tail = sorted(costs[v] for v in cand[i:])
        acc = [0]
        for w in tail:
            acc.append(acc[-1] + w)
        cheapest.append(acc)
    yield ()
    for k in range(1, m + 1):
        if cheapest[0][k] > budget:
            break
        chosen = []

        def extend(start, spent, need):
            if need == 0:
                yield tuple(chosen)
                return
            for i in range(start, m - need + 1):
                if spent + cheapest[i][need] > budget:
                    break
                w = costs[cand[i]]
                if spent + w + cheapest[i + 1][need - 1] > budget:
                    continue
                chosen.append(cand[i])
                yield from extend(i + 1, spent + w, need - 1)
                chosen.pop()

        yield from extend(0, 0, k)


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Board:
    """Bit-mask propagation with a play counter."""

    def __init__(self, inst: Instance, max_plays: int, tie_break: str = "first"):
        if tie_break not in ("first", "last"):
            raise ValueError(f"tie_break must be 'first' or 'last', got {tie_break!r}")
        self.reverse = tie_break == "last"
        self.inst = inst
        self.out = inst.graph.out_masks
        self.b = inst.b
        self.unit_benefit = all(w == 1 for w in inst.b)
        self.total = sum(inst.b)
        self.max_plays = max_plays
        self.plays = 0

    def benefit(self, mask: int) -> int:
        if self.unit_benefit:
            return mask.bit_count()
        return sum(self.b[v] for v in _members(mask))

    def spread(self, sources: int, blocked: int) -> int:
        out = self.out
        reach = sources & ~blocked
        frontier = reach
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= out[low.bit_length() - 1]
                frontier ^= low
            nxt &= ~(reach | blocked)
            reach |= nxt
            frontier = nxt
        return reach

    def moves(self, costs, cands, budget):
        moves = enumerate_budget_subsets(costs, cands, budget)
        return reversed(list(moves)) if self.reverse else moves

    def count(self):
        self.plays += 1
        if self.plays > self.max_plays:
            raise SearchTooLarge(self.max_plays)

    def saved(self, attacked: int, blocked: int) -> int:
        self.count()
        return self.total - self.benefit(self.spread(attacked, blocked))


def _protect_level(board: _Board, vacc: int, attacked: int, lam: int,
                   beta=None, restrict=None):
    """Defender's last move.  Returns (value, P); stops once value >= beta."""
    inst = board.inst
    threatened = board.spread(attacked, vacc) & ~attacked
    # Protecting a vertex the infection cannot reach changes nothing, and an
    # optimum using one is preceded in canonical order by the same set
    # without it, so those vertices can be skipped without changing the
    # reported witness (with tie_break="last" the witness is the last
    # optimum among protections of threatened vertices).
    cands = _members(threatened)
    if restrict is not None:
        cands = [v for v in cands if v in restrict]
    ceiling = board.total - board.benefit(attacked)
    best_val, best_p = None, ()
    for P in board.moves(inst.c_prot, cands, lam):
        val = board.saved(attacked, vacc | _mask(P))
        if best_val is None or val > best_val:
            best_val, best_p = val, P
            if val >= ceiling or (beta is not None and val >= beta):
                break
    return best_val, best_p


def _attack_level(board: _Board, vacc: int, phi: int, lam, alpha=None):
    """Attacker's move followed by the defender's reply.

    ``lam=None`` means there is no reply (a zero budget still allows
    zero-cost protections).  Returns (value, I, P); stops once value <= alpha.
    """
    inst = board.inst
    cands = [v for v in range(inst.n) if not vacc >> v & 1]
    floor = board.benefit(vacc)
    best = None
    for I in board.moves(inst.c_att, cands, phi):
        im = _mask(I)
        if lam is None:
            val, P = board.saved(im, vacc), ()
        else:
            cut = best[0] if best is not None else None
            val, P = _protect_level(board, vacc, im, lam, beta=cut)
        if best is None or val < best[0]:
            best = (val, I, P)
            if val <= floor or (alpha is not None and val <= alpha):
                break
    return best


def _vaccination_level(board: _Board, omega: int, phi: int, lam, attack=None):
    inst = board.inst
    best = None
    for D in board.moves(inst.c_vacc, range(inst.n), omega):
        dm = _mask(D)
        alpha = best[0] if best is not None else None
        if attack is None:
            val, I, P = _attack_level(board, dm, phi, lam, alpha=alpha)
        else:
            val, I, P = attack(dm)
        if best is None or val > best[0]:
            best = (val, D, I, P)
            if val >= board.total:
                break
    return best


def _check(inst: Instance, D=(), I=()):
    # Moves handed in by the caller are checked for range and overlap only;
    # budgets constrain the moves a solver chooses.
    StrategyTriple(D, I).validate(inst, budgets=False)


def best_protect(inst: Instance, D: Iterable[int] = (), I: Iterable[int] = (), *,
                 candidates_only: bool = False, max_plays: int = DEFAULT_MAX_PLAYS,
                 tie_break: str = "first") -> GameValue:
    """Best protection against a fixed vaccination and attack.

    With ``candidates_only`` (directed graphs, uniform protection costs) the
    search is limited to candidate vertices, which keeps the optimal value.
    """
    D, I = tuple(sorted(set(D))), tuple(sorted(set(I)))
    _check(inst, D, I)
    board = _Board(inst, max_plays, tie_break)
    restrict = None
    if candidates_only:
        if not inst.graph.directed:
            raise ValueError("candidate pruning applies to directed graphs only")
        if len(set(inst.c_prot)) > 1:
            raise ValueError("candidate pruning needs uniform protection costs")
        from .poly.candidates import compute_candidates
        sub, mapping = induced_subgraph(inst.graph, D)
        back = {new: old for old, new in mapping.items()}
        cs = compute_candidates(sub, [mapping[v] for v in I])
        restrict = {back[v] for v in cs.members}
    val, P = _protect_level(board, _mask(D), _mask(I), inst.lam, restrict=restrict)
    return GameValue(val, D, I, tuple(P), board.plays)


def best_attack(inst: Instance, D: Iterable[int] = (), *, max_plays: int = DEFAULT_MAX_PLAYS,
                tie_break: str = "first") -> GameValue:
    """Attack minimizing the saved benefit, with no protection afterwards."""
    D = tuple(sorted(set(D)))
    _check(inst, D)
    board = _Board(inst, max_plays, tie_break)
    val, I, _ = _attack_level(board, _mask(D), inst.phi, None)
    return GameValue(val, D, tuple(I), (), board.plays)


def best_attack_protect(inst: Instance, D: Iterable[int] = (), *,
                        max_plays: int = DEFAULT_MAX_PLAYS, tie_break: str = "first") -> GameValue:
    """min over attacks of the best protection reply."""
    D = tuple(sorted(set(D)))
    _check(inst, D)
    board = _Board(inst, max_plays, tie_break)
    val, I, P = _attack_level(board, _mask(D), inst.phi, inst.lam)
    return GameValue(val, D, tuple(I), tuple(P), board.plays)


def best_vaccination_attack(inst: Instance, *, max_plays: int = DEFAULT_MAX_PLAYS,
                            use_components: bool = True, tie_break: str = "first") -> GameValue:
    """max over vaccinations of the worst attack, no protection.

    For unitary undirected instances the attack is answered by hitting the
    largest components (``use_components``); the value is the same as the
    exhaustive attack but the reported attack may differ from its canonical
    choice.
    """
    board = _Board(inst, max_plays, tie_break)
    attack = None
    if use_components and inst.unitary and not inst.graph.directed:
        from .poly.attack import attack_components_unitary

        def attack(dm):
            board.count()
            removed = _members(dm)
            sub, mapping = induced_subgraph(inst.graph, removed)
            back = {new: old for old, new in mapping.items()}
            I, infected = attack_components_unitary(sub, inst.phi)
            return inst.n - infected, tuple(sorted(back[v] for v in I)), ()

    val, D, I, P = _vaccination_level(board, inst.omega, inst.phi, None, attack=attack)
    return GameValue(val, tuple(D), tuple(I), (), board.plays)


def solve_mcn(inst: Instance, *, max_plays: int = DEFAULT_MAX_PLAYS,
              tie_break: str = "first") -> GameValue:
    """Full three-level optimum: vaccinate, attack, protect.

    Among equally good moves every level keeps the first one in canonical
    order; ``tie_break="last"`` keeps the last one instead.  The value is
    the same either way.
    """
    board = _Board(inst, max_plays, tie_break)
    val, D, I, P = _vaccination_level(board, inst.omega, inst.phi, inst.lam)
    return GameValue(val, tuple(D), tuple(I), tuple(P), board.plays)

