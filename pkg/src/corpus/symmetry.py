# src/corpus/symmetry.py

"""
How ? and ! commute with the connectives and quantifiers. The ? laws are the
schemata left out of the minimal QHC table, derived here from it.
"""

from corpus.registry import corpus_entry

ANCHOR = "? and ! against the connectives"


@corpus_entry("sym.wn_all", "?(forall x. pi(x)) -> forall x. ?pi(x)", anchor=ANCHOR)
def wn_forall(b):
    step = b.monotone_wn(b.axiom("all_e", target="forall x. pi(x) -> pi(x)"))
    return b.all_intro_imp(b.gen(step, "x"))


@corpus_entry("sym.wn_and.fwd", "?(a & b) -> ?a & ?b", anchor=ANCHOR)
def wn_and_fwd(b):
    to_a = b.monotone_wn(b.axiom("and_l", A="a", B="b"))
    to_b = b.monotone_wn(b.axiom("and_r", A="a", B="b"))
    h = b.assume("?(a & b)")
    return b.discharge(h, b.conj(b.mp(to_a, h), b.mp(to_b, h)))


@corpus_entry("sym.wn_and.bwd", "?a & ?b -> ?(a & b)", anchor=ANCHOR)
def wn_and_bwd(b):
    pair = b.syl(b.monotone_wn(b.axiom("and_i", A="a", B="b")), b.axiom("wn_imp", A="b", B="a & b"))
    h = b.assume("?a & ?b")
    return b.discharge(h, b.mp(b.mp(pair, b.left(h)), b.right(h)))


@corpus_entry("sym.wn_or.bwd", "?a | ?b -> ?(a | b)", anchor=ANCHOR)
def wn_or_bwd(b):
    from_a = b.monotone_wn(b.axiom("or_l", A="a", B="b"))
    from_b = b.monotone_wn(b.axiom("or_r", A="a", B="b"))
    cases = b.axiom("or_e", A="?a", B="?b", C="?(a | b)")
    return b.mp(from_b, b.mp(from_a, cases))


@corpus_entry("sym.wn_or.fwd", "?(a | b) -> ?a | ?b", anchor=ANCHOR)
def wn_or_fwd(b):
    into = b.disj_map(b.axiom("oc_wn", A="a"), b.axiom("oc_wn", A="b"))
    step = b.syl(into, b.lemma("sym.oc_or", p="?a", q="?b"))
    return b.lemma("galois.bwd", step)


@corpus_entry("sym.wn_ex.bwd", "(exists x. ?pi(x)) -> ?(exists x. pi(x))", anchor=ANCHOR)
def wn_exists_bwd(b):
    step = b.monotone_wn(b.axiom("ex_i", target="pi(x) -> exists x. pi(x)"))
    return b.ex_elim(b.gen(step, "x"))


@corpus_entry("sym.wn_ex.fwd", "?(exists x. pi(x)) -> exists x. ?pi(x)", anchor=ANCHOR)
def wn_exists_fwd(b):
    into = b.ex_map(b.axiom("oc_wn", A="pi(x)"), "x")
    step = b.syl(into, b.lemma("sym.oc_ex", r=b.lam("x", "?pi(x)")))
    return b.lemma("galois.bwd", step)


@corpus_entry("sym.wn_bot", "~?bot", anchor=ANCHOR)
def wn_bot(b):
    step = b.monotone_wn(b.axiom("efq", target="bot -> !0"))
    return b.syl(step, b.axiom("wn_oc", P="0"))


@corpus_entry("sym.oc_and.fwd", "!p & !q -> !(p & q)", anchor=ANCHOR)
def oc_and_fwd(b):
    pair = b.syl(b.monotone_oc(b.axiom("and_i", A="p", B="q")), b.axiom("oc_imp", P="q", Q="p & q"))
    h = b.assume("!p & !q")
    return b.discharge(h, b.mp(b.mp(pair, b.left(h)), b.right(h)))


@corpus_entry("sym.oc_and.bwd", "!(p & q) -> !p & !q", anchor=ANCHOR)
def oc_and_bwd(b):
    to_p = b.monotone_oc(b.axiom("and_l", A="p", B="q"))
    to_q = b.monotone_oc(b.axiom("and_r", A="p", B="q"))
    h = b.assume("!(p & q)")
    return b.discharge(h, b.conj(b.mp(to_p, h), b.mp(to_q, h)))


@corpus_entry("sym.oc_or", "!p | !q -> !(p | q)", anchor=ANCHOR)
def oc_or(b):
    from_p = b.monotone_oc(b.axiom("or_l", A="p", B="q"))
    from_q = b.monotone_oc(b.axiom("or_r", A="p", B="q"))
    cases = b.axiom("or_e", A="!p", B="!q", C="!(p | q)")
    return b.mp(from_q, b.mp(from_p, cases))


@corpus_entry("sym.oc_all.bwd", "!(forall x. r(x)) -> forall x. !r(x)", anchor=ANCHOR)
def oc_forall_bwd(b):
    step = b.monotone_oc(b.axiom("all_e", target="forall x. r(x) -> r(x)"))
    return b.all_intro_imp(b.gen(step, "x"))


@corpus_entry("sym.oc_all.fwd", "(forall x. !r(x)) -> !(forall x. r(x))", anchor=ANCHOR)
def oc_forall_fwd(b):
    out = b.lemma("sym.wn_all", pi=b.lam("x", "!r(x)"))
    step = b.syl(out, b.all_map(b.axiom("wn_oc", P="r(x)"), "x"))
    return b.lemma("galois.fwd", step)


@corpus_entry("sym.oc_ex", "(exists x. !r(x)) -> !(exists x. r(x))", anchor=ANCHOR)
def oc_exists(b):
    step = b.monotone_oc(b.axiom("ex_i", target="r(x) -> exists x. r(x)"))
    return b.ex_elim(b.gen(step, "x"))
