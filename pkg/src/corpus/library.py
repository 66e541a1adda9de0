# src/corpus/library.py

"""
Propositional tautologies used as lemmas by the rest of the corpus, each proved once
for problems (ipc.*) and once for propositions (cpc.*).
"""

from corpus.registry import library_lemma
from logic.formula import And, Imp, Or, neg


@library_lemma("id", "A -> A")
def identity(b, A, B, C):
    return b.identity(A)


@library_lemma("exp.fwd", "(A & B -> C) -> (A -> (B -> C))", anchor="exponential law")
def exponential_fwd(b, A, B, C):
    F = b.assume(Imp(And(A, B), C))
    x = b.assume(A)
    y = b.assume(B)
    c = b.mp(F, b.conj(x, y))
    return b.discharge(F, b.discharge(x, b.discharge(y, c)))


@library_lemma("exp.bwd", "(A -> (B -> C)) -> (A & B -> C)", anchor="exponential law")
def exponential_bwd(b, A, B, C):
    F = b.assume(Imp(A, Imp(B, C)))
    h = b.assume(And(A, B))
    c = b.mp(b.mp(F, b.left(h)), b.right(h))
    return b.discharge(F, b.discharge(h, c))


@library_lemma("dni", "A -> ~~A")
def double_negation_intro(b, A, B, C):
    x = b.assume(A)
    n = b.assume(neg(A))
    return b.discharge(x, b.discharge(n, b.mp(n, x)))


@library_lemma("tne", "~~~A -> ~A", anchor="triple negation")
def triple_negation(b, A, B, C):
    t = b.assume(neg(neg(neg(A))))
    x = b.assume(A)
    n = b.assume(neg(A))
    nn = b.discharge(n, b.mp(n, x))
    return b.discharge(t, b.discharge(x, b.mp(t, nn)))


@library_lemma("contra", "(A -> B) -> (~B -> ~A)")
def contraposition(b, A, B, C):
    F = b.assume(Imp(A, B))
    nb = b.assume(neg(B))
    x = b.assume(A)
    absurd = b.mp(nb, b.mp(F, x))
    return b.discharge(F, b.discharge(nb, b.discharge(x, absurd)))


@library_lemma("shift", "(A -> ~B) -> (B -> ~A)")
def shift(b, A, B, C):
    F = b.assume(Imp(A, neg(B)))
    y = b.assume(B)
    x = b.assume(A)
    absurd = b.mp(b.mp(F, x), y)
    return b.discharge(F, b.discharge(y, b.discharge(x, absurd)))


@library_lemma("nnimp", "~~(A -> B) -> (~~A -> ~~B)")
def negneg_implication(b, A, B, C):
    F = b.assume(neg(neg(Imp(A, B))))
    G = b.assume(neg(neg(A)))
    h = b.assume(neg(B))
    i = b.assume(Imp(A, B))
    x = b.assume(A)
    not_a = b.discharge(x, b.mp(h, b.mp(i, x)))
    not_imp = b.discharge(i, b.mp(G, not_a))
    not_not_b = b.discharge(h, b.mp(F, not_imp))
    return b.discharge(F, b.discharge(G, not_not_b))


@library_lemma("nnlem", "~~(A | ~A)")
def negneg_excluded_middle(b, A, B, C):
    lem = Or(A, neg(A))
    n = b.assume(neg(lem))
    x = b.assume(A)
    not_a = b.discharge(x, b.mp(n, b.or_l(x, neg(A))))
    return b.discharge(n, b.mp(n, b.or_r(not_a, A)))


@library_lemma("ornot", "A | B -> (~B -> A)")
def disjunction_not(b, A, B, C):
    d = b.assume(Or(A, B))
    nb = b.assume(neg(B))
    y = b.assume(B)
    from_b = b.discharge(y, b.efq(b.mp(nb, y), A))
    a = b.cases(d, b.identity(A), from_b)
    return b.discharge(d, b.discharge(nb, a))


@library_lemma("ds", "(A | B) & ~A -> B", anchor="disjunctive syllogism")
def disjunctive_syllogism(b, A, B, C):
    h = b.assume(And(Or(A, B), neg(A)))
    na = b.right(h)
    x = b.assume(A)
    from_a = b.discharge(x, b.efq(b.mp(na, x), B))
    return b.discharge(h, b.cases(b.left(h), from_a, b.identity(B)))


@library_lemma("ds.r", "(A | B) & ~B -> A", anchor="disjunctive syllogism")
def disjunctive_syllogism_right(b, A, B, C):
    h = b.assume(And(Or(A, B), neg(B)))
    nb = b.right(h)
    y = b.assume(B)
    from_b = b.discharge(y, b.efq(b.mp(nb, y), A))
    return b.discharge(h, b.cases(b.left(h), b.identity(A), from_b))


@library_lemma("nand", "~(A & B) -> (~~A -> ~B)")
def negated_conjunction(b, A, B, C):
    F = b.assume(neg(And(A, B)))
    G = b.assume(neg(neg(A)))
    y = b.assume(B)
    x = b.assume(A)
    not_a = b.discharge(x, b.mp(F, b.conj(x, y)))
    not_b = b.discharge(y, b.mp(G, not_a))
    return b.discharge(F, b.discharge(G, not_b))


@library_lemma("noncontra", "~(A & ~A)")
def non_contradiction(b, A, B, C):
    h = b.assume(And(A, neg(A)))
    return b.discharge(h, b.mp(b.right(h), b.left(h)))


@library_lemma("lem", "A | ~A", anchor="excluded middle", families=("cpc",))
def excluded_middle(b, A, B, C):
    lem = Or(A, neg(A))
    nn = b.lemma("cpc.nnlem", target=neg(neg(lem)))
    return b.mp(nn, b.axiom("dne", A=lem))
