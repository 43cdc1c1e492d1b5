"""Declarative semantics and answer-set computation.

An interpretation maps every ground literal to a truth value, defaulting to
the unknown state ifn(0,1).  A rule fires its head to body-fold AND weight;
heads with several rules combine by disjunction in program order; when both
a literal and its complement have rules the more certain side wins via
knowledge aggregation.  Answer sets are interpretations that reproduce
themselves as the fixpoint of their own reduct.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .connectives import conj, disj, kagg, naf, negate
from .errors import AggregationTie, Inconsistent, MonotonicityError, NonConvergent
from .measures import truth_degree, uncertainty_degree
from .program import FuzzyTruth, GroundProgram, Literal, Naf, Program, Rule, ground
from .truthspace import DEFAULT_EPS, TRUE, UNKNOWN, equal

DEFAULT_MAX_ITER = 10_000


class Interpretation:
    """Finite map from ground literals to truth values; unknown elsewhere."""

    def __init__(self, assignment=None):
        self.assignment = dict(assignment or {})

    def value(self, literal: Literal) -> FuzzyTruth:
        return self.assignment.get(literal, UNKNOWN)

    def items(self):
        return self.assignment.items()

    def __repr__(self):  # pragma: no cover - cosmetic
        inner = ", ".join(f"{l}: {v}" for l, v in self.assignment.items())
        return "{" + inner + "}"


def interpretations_equal(
    x: Interpretation, y: Interpretation, eps: float = DEFAULT_EPS
) -> bool:
    """Per-literal equality within ``eps`` over the union of assigned literals."""
    literals = set(x.assignment) | set(y.assignment)
    return all(equal(x.value(l), y.value(l), eps) for l in literals)


def is_inconsistent(i: Interpretation, eps: float = DEFAULT_EPS):
    """First atom whose two polarities are equally certain yet contradictory.

    Returns the offending atom, or None.
    """
    seen = set()
    for literal in i.assignment:
        atom = literal.atom
        if atom in seen:
            continue
        seen.add(atom)
        pos, neg = Literal(atom), Literal(atom, True)
        if pos not in i.assignment or neg not in i.assignment:
            continue
        vp, vn = i.value(pos), i.value(neg)
        if abs(uncertainty_degree(vp) - uncertainty_degree(vn)) <= eps and (
            abs(truth_degree(vp) - (1.0 - truth_degree(vn))) > eps
        ):
            return atom
    return None


def eval_body(i: Interpretation, rule: Rule) -> FuzzyTruth:
    """Left-to-right conjunction fold of the body, then the rule weight.

    Positive literals read their value from ``i``, inline constants pass
    through, naf literals contribute naf(I(b)).  Order matters: conjunction
    with truncated operands is not associative.
    """
    acc = None
    for item in rule.body:
        if isinstance(item, FuzzyTruth):
            v = item
        elif isinstance(item, Naf):
            v = naf(i.value(item.literal))
        else:
            v = i.value(item)
        acc = v if acc is None else conj(acc, v)
    if acc is None:
        acc = TRUE
    return conj(acc, rule.weight)


def satisfies(i: Interpretation, rule: Rule, eps: float = DEFAULT_EPS) -> bool:
    """Head equals the body value or strictly exceeds it in either order."""
    head = i.value(rule.head)
    body = eval_body(i, rule)
    if equal(head, body, eps):
        return True
    if uncertainty_degree(head) < uncertainty_degree(body) - eps:
        return True
    return truth_degree(head) > truth_degree(body) + eps


def _contribution(i: Interpretation, gp: GroundProgram, literal: Literal) -> FuzzyTruth:
    """Disjunction fold (program order) of the body values of ``literal``'s rules."""
    acc = None
    for rule in gp.rules_for(literal):
        v = eval_body(i, rule)
        acc = v if acc is None else disj(acc, v)
    return acc


def _target(i, gp: GroundProgram, literal: Literal, eps: float) -> FuzzyTruth:
    """The supported value for a head literal.

    The complement's combined evidence is aggregated in only when the
    complement has rules of its own; AggregationTie propagates.
    """
    own = _contribution(i, gp, literal)
    comp = literal.complement()
    if gp.rules_for(comp):
        against = _contribution(i, gp, comp)
        return kagg(own, negate(against), eps)
    return own


@dataclass(frozen=True)
class Violation:
    """One failed supportedness condition."""

    literal: Literal
    condition: int
    expected: FuzzyTruth | None = None
    actual: FuzzyTruth | None = None

    def __repr__(self):
        if self.expected is None:
            return f"condition {self.condition} at {self.literal}: aggregation tie"
        return (
            f"condition {self.condition} at {self.literal}: "
            f"expected {self.expected}, got {self.actual}"
        )


def is_supported(
    i: Interpretation, gp: GroundProgram, eps: float = DEFAULT_EPS
) -> Violation | None:
    """First supportedness violation, or None.

    Condition 1 covers single-rule heads, condition 2 the disjunctive
    combination of several rules, condition 3 the aggregation against a
    complement that also has rules.
    """
    for literal in gp.head_literals:
        comp_ruled = bool(gp.rules_for(literal.complement()))
        condition = 3 if comp_ruled else (1 if len(gp.rules_for(literal)) == 1 else 2)
        try:
            expected = _target(i, gp, literal, eps)
        except AggregationTie:
            return Violation(literal, 3)
        if not equal(i.value(literal), expected, eps):
            return Violation(literal, condition, expected, i.value(literal))
    return None


def reduct(gp: GroundProgram, i: Interpretation) -> GroundProgram:
    """Freeze every naf literal at naf(I(b)); the result is positive."""
    return _freeze_naf(gp, lambda b: naf(i.value(b)))


def _freeze_naf(gp: GroundProgram, naf_value) -> GroundProgram:
    rules = tuple(
        Rule(
            r.head,
            tuple(
                naf_value(item.literal) if isinstance(item, Naf) else item
                for item in r.body
            ),
            r.weight,
            r.label,
        )
        for r in gp.rules
    )
    index = {}
    for idx, rule in enumerate(rules):
        index.setdefault(rule.head, ())
        index[rule.head] += (idx,)
    return GroundProgram(rules, index)


def _initial(gp: GroundProgram) -> Interpretation:
    return Interpretation({l: UNKNOWN for l in gp.literals})


def _step(i: Interpretation, gp: GroundProgram, eps: float) -> Interpretation:
    """One Jacobi pass: every head recomputed from the previous interpretation."""
    new = dict(i.assignment)
    for literal in gp.head_literals:
        try:
            new[literal] = _target(i, gp, literal, eps)
        except AggregationTie as exc:
            raise Inconsistent(literal.atom) from exc
    return Interpretation(new)


def kmin_supported_model(
    gp: GroundProgram,
    *,
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
    trace: list | None = None,
) -> Interpretation:
    """Fixpoint of the supported-value operator on a positive program.

    Starts from the all-unknown interpretation; every pass must leave each
    literal at least as certain as before (MonotonicityError otherwise).
    Raises NonConvergent past ``max_iter`` and Inconsistent when the
    fixpoint assigns contradictory equally-certain complements or an
    aggregation ties.
    """
    return _kmin_counted(gp, eps, max_iter, trace)[0]


def _kmin_counted(gp: GroundProgram, eps, max_iter, trace=None):
    if gp.has_naf:
        raise ValueError("kmin_supported_model requires a positive program")
    current = _initial(gp)
    for passno in range(1, max_iter + 1):
        new = _step(current, gp, eps)
        if trace is not None:
            trace.append(dict(new.assignment))
        for literal, value in new.items():
            if uncertainty_degree(value) > uncertainty_degree(current.value(literal)) + eps:
                raise MonotonicityError(
                    f"uncertainty increased at {literal}: "
                    f"{current.value(literal)} -> {value}"
                )
        if interpretations_equal(new, current, eps):
            atom = is_inconsistent(new, eps)
            if atom is not None:
                raise Inconsistent(atom)
            return new, passno
        current = new
    raise NonConvergent(max_iter)


class Status(enum.Enum):
    ANSWER_SET = "answer-set"
    NOT_MODEL = "not-model"
    NOT_SUPPORTED = "not-supported"
    NOT_K_MINIMAL = "not-k-minimal"
    INCONSISTENT = "inconsistent"
    NON_CONVERGENT = "non-convergent"


@dataclass
class CandidateResult:
    interpretation: Interpretation | None
    status: Status
    detail: object = None


@dataclass
class SolveReport:
    answer_sets: list = field(default_factory=list)
    candidates: list = field(default_factory=list)
    iterations: int = 0
    trace: list | None = None
    guess_depth: int | None = None


def verify_answer_set(
    gp: GroundProgram,
    i: Interpretation,
    *,
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CandidateResult:
    """Full Definition-style check of one candidate.

    Answer set iff the candidate is a consistent supported model and equals
    the fixpoint of its own reduct; otherwise the specific failure.
    """
    atom = is_inconsistent(i, eps)
    if atom is not None:
        return CandidateResult(i, Status.INCONSISTENT, atom)
    for rule in gp.rules:
        if not satisfies(i, rule, eps):
            return CandidateResult(i, Status.NOT_MODEL, rule)
    violation = is_supported(i, gp, eps)
    if violation is not None:
        return CandidateResult(i, Status.NOT_SUPPORTED, violation)
    try:
        fix = kmin_supported_model(reduct(gp, i), eps=eps, max_iter=max_iter)
    except Inconsistent as exc:
        return CandidateResult(i, Status.INCONSISTENT, exc.atom)
    except NonConvergent:
        return CandidateResult(i, Status.NON_CONVERGENT, None)
    if not interpretations_equal(fix, i, eps):
        return CandidateResult(i, Status.NOT_K_MINIMAL, fix)
    return CandidateResult(i, Status.ANSWER_SET)


def _state_key(i: Interpretation, literals) -> tuple:
    return tuple(
        round(p, 12) for l in literals for p in i.value(l).params
    )


def _iterate_combined(gp: GroundProgram, eps, max_iter, trace):
    """Operator trajectory with naf values evolving with the interpretation.

    Returns (interpretation or None, iterations, failure detail).  A state
    revisited beyond the immediate predecessor is a proper cycle, reported
    as non-convergent without burning through the iteration cap.
    """
    literals = gp.literals
    current = _initial(gp)
    seen = {_state_key(current, literals)}
    for passno in range(1, max_iter + 1):
        try:
            new = _step(current, gp, eps)
        except Inconsistent as exc:
            return None, passno, CandidateResult(None, Status.INCONSISTENT, exc.atom)
        if trace is not None:
            trace.append(dict(new.assignment))
        if interpretations_equal(new, current, eps):
            return new, passno, None
        key = _state_key(new, literals)
        if key in seen:
            return None, passno, CandidateResult(None, Status.NON_CONVERGENT, None)
        seen.add(key)
        current = new
    return None, max_iter, CandidateResult(None, Status.NON_CONVERGENT, None)


def _has_naf_cycle(gp: GroundProgram) -> bool:
    """True when some dependency cycle passes through a naf edge.

    Without such a cycle the program is stratified: naf values are uniquely
    determined bottom-up and the operator trajectory's fixpoint is the only
    answer-set candidate, so no guessing is needed.  Complement-coupled
    heads count as mutually dependent (their targets aggregate each other).
    """
    edges: dict[Literal, set] = {}
    naf_edges = []
    for rule in gp.rules:
        for item in rule.body:
            if isinstance(item, Naf):
                edges.setdefault(rule.head, set()).add(item.literal)
                naf_edges.append((rule.head, item.literal))
            elif isinstance(item, Literal):
                edges.setdefault(rule.head, set()).add(item)
    for literal in gp.head_literals:
        comp = literal.complement()
        if gp.rules_for(comp):
            edges.setdefault(literal, set()).add(comp)
    for head, naffed in naf_edges:
        seen = {naffed}
        stack = [naffed]
        while stack:
            node = stack.pop()
            if node == head:
                return True
            for nxt in edges.get(node, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return False


def _naf_guess_domain(gp: GroundProgram, depth: int):
    """Possible naf values: image of the weight closure under naf."""
    from .errors import ClosureTooLarge
    from .oracle import closure_enumerate

    seeds = {TRUE, UNKNOWN}
    for rule in gp.rules:
        seeds.add(rule.weight)
        for item in rule.body:
            if isinstance(item, FuzzyTruth):
                seeds.add(item)
    while depth >= 1:
        try:
            closure = closure_enumerate(seeds, depth)
            break
        except ClosureTooLarge:
            depth -= 1
    else:
        closure = tuple(seeds)
    domain: dict[float, FuzzyTruth] = {}
    for v in closure:
        domain.setdefault(round(1.0 - v.b, 9), naf(v))
    return list(domain.values()), depth


def solve(
    program: Program | GroundProgram,
    *,
    eps: float = DEFAULT_EPS,
    max_iter: int = DEFAULT_MAX_ITER,
    guess_depth: int = 3,
    max_guesses: int = 100_000,
    collect_trace: bool = False,
) -> SolveReport:
    """Ground, generate candidates, verify each, and report.

    Positive programs have the unique operator fixpoint as their only
    candidate.  With naf, the evolving-naf trajectory is tried first and
    then every self-consistent assignment of naf values drawn from the
    operator closure of the program weights (depth ``guess_depth``).
    """
    gp = ground(program) if isinstance(program, Program) else program
    trace = [] if collect_trace else None
    report = SolveReport(trace=trace)

    candidates: list[Interpretation] = []

    def add_candidate(candidate: Interpretation):
        if not any(interpretations_equal(candidate, c, eps) for c in candidates):
            candidates.append(candidate)

    if not gp.has_naf:
        try:
            fix, report.iterations = _kmin_counted(gp, eps, max_iter, trace)
            add_candidate(fix)
        except Inconsistent as exc:
            report.candidates.append(
                CandidateResult(None, Status.INCONSISTENT, exc.atom)
            )
        except NonConvergent:
            report.candidates.append(CandidateResult(None, Status.NON_CONVERGENT, None))
    else:
        fix, passes, failure = _iterate_combined(gp, eps, max_iter, trace)
        report.iterations = passes
        if fix is not None:
            add_candidate(fix)
        elif failure is not None:
            report.candidates.append(failure)

        if _has_naf_cycle(gp):
            _guess_candidates(
                gp, add_candidate, report, eps, max_iter, guess_depth, max_guesses
            )

    for candidate in candidates:
        result = verify_answer_set(gp, candidate, eps=eps, max_iter=max_iter)
        report.candidates.append(result)
        if result.status is Status.ANSWER_SET:
            report.answer_sets.append(candidate)
    return report


def _guess_candidates(gp, add_candidate, report, eps, max_iter, guess_depth, max_guesses):
    """Second candidate tier: self-consistent naf-value assignments.

    Every answer set whose naf values lie in the weight closure is the
    fixpoint of the program frozen at those values, so enumerating the
    (deduplicated) naf images of the closure finds all of them.
    """
    naf_literals = []
    for rule in gp.rules:
        for lit in rule.naf_body:
            if lit not in naf_literals:
                naf_literals.append(lit)
    domain, depth_used = _naf_guess_domain(gp, guess_depth)
    while len(domain) ** len(naf_literals) > max_guesses and depth_used > 1:
        depth_used -= 1
        domain, depth_used = _naf_guess_domain(gp, depth_used)
    report.guess_depth = depth_used
    if len(domain) ** len(naf_literals) > max_guesses:
        raise ValueError(
            f"{len(domain) ** len(naf_literals)} naf guesses exceed "
            f"max_guesses={max_guesses}"
        )
    for combo in itertools.product(domain, repeat=len(naf_literals)):
        guess = dict(zip(naf_literals, combo))
        frozen = _freeze_naf(gp, lambda b: guess[b])
        try:
            fix = kmin_supported_model(frozen, eps=eps, max_iter=max_iter)
        except (Inconsistent, NonConvergent):
            continue
        if all(equal(naf(fix.value(b)), guess[b], eps) for b in naf_literals):
            add_candidate(fix)
