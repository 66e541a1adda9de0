# src/corpus/gentzen.py

"""
Fixed points of ?! and !? on images of ? and !, the Goedel and Kuroda style
insertion of !? and ?!, and the cases where neither simplifies further.
"""

from corpus.registry import corpus_entry

FIXED = "?! and !? fix images of ? and !"
INSERT = "inserting !? and ?! under ? and !"
WORST = "?! and !? that do not cancel"


@corpus_entry("mg.a.fwd", "?!(?a & ?b) -> ?a & ?b", anchor=FIXED)
def mg_a_fwd(b):
    return b.axiom("wn_oc", P="?a & ?b")


@corpus_entry("mg.a.bwd", "?a & ?b -> ?!(?a & ?b)", anchor=FIXED)
def mg_a_bwd(b):
    both = b.conj_map(b.lemma("galois.wn_idem.bwd"), b.lemma("galois.wn_idem.bwd", a="b"))
    return b.syl(both, b.lemma("box_and.bwd", p="?a", q="?b"))


@corpus_entry("mg.b.fwd", "?!(?a | ?b) -> ?a | ?b", anchor=FIXED)
def mg_b_fwd(b):
    return b.axiom("wn_oc", P="?a | ?b")


@corpus_entry("mg.b.bwd", "?a | ?b -> ?!(?a | ?b)", anchor=FIXED)
def mg_b_bwd(b):
    return b.chain(b.lemma("sym.wn_or.bwd"),
                   b.lemma("galois.wn_idem.bwd", a="a | b"),
                   b.monotone_box(b.lemma("sym.wn_or.fwd")))


@corpus_entry("mg.c.fwd", "?!(exists x. ?pi(x)) -> exists x. ?pi(x)", anchor=FIXED)
def mg_c_fwd(b):
    return b.axiom("wn_oc", P="exists x. ?pi(x)")


@corpus_entry("mg.c.bwd", "(exists x. ?pi(x)) -> ?!(exists x. ?pi(x))", anchor=FIXED)
def mg_c_bwd(b):
    return b.chain(b.lemma("sym.wn_ex.bwd"),
                   b.lemma("galois.wn_idem.bwd", a="exists x. pi(x)"),
                   b.monotone_box(b.lemma("sym.wn_ex.fwd")))


@corpus_entry("mg.d.fwd", "!?(!p & !q) -> !p & !q", anchor=FIXED)
def mg_d_fwd(b):
    return b.chain(b.monotone_nabla(b.lemma("sym.oc_and.fwd")),
                   b.lemma("galois.oc_idem.fwd", p="p & q"),
                   b.lemma("sym.oc_and.bwd"))


@corpus_entry("mg.d.bwd", "!p & !q -> !?(!p & !q)", anchor=FIXED)
def mg_d_bwd(b):
    return b.axiom("oc_wn", A="!p & !q")


@corpus_entry("mg.e.fwd", "!?(!p -> !q) -> (!p -> !q)", anchor=FIXED)
def mg_e_fwd(b):
    spread = b.lemma("nabla.4", a="!p", b="!q")
    unwrap = b.imp_map(b.axiom("oc_wn", A="!p"), b.lemma("galois.oc_idem.fwd", p="q"))
    return b.syl(spread, unwrap)


@corpus_entry("mg.e.bwd", "(!p -> !q) -> !?(!p -> !q)", anchor=FIXED)
def mg_e_bwd(b):
    return b.axiom("oc_wn", A="!p -> !q")


@corpus_entry("mg.f.fwd", "!?(forall x. !r(x)) -> forall x. !r(x)", anchor=FIXED)
def mg_f_fwd(b):
    return b.chain(b.monotone_nabla(b.lemma("sym.oc_all.fwd")),
                   b.lemma("galois.oc_idem.fwd", p="forall x. r(x)"),
                   b.lemma("sym.oc_all.bwd"))


@corpus_entry("mg.f.bwd", "(forall x. !r(x)) -> !?(forall x. !r(x))", anchor=FIXED)
def mg_f_bwd(b):
    return b.axiom("oc_wn", A="forall x. !r(x)")


@corpus_entry("gk.a.fwd", "?(a & b) -> ?(!?a & !?b)", anchor=INSERT)
def gk_a_fwd(b):
    return b.monotone_wn(b.conj_map(b.axiom("oc_wn", A="a"), b.axiom("oc_wn", A="b")))


@corpus_entry("gk.a.bwd", "?(!?a & !?b) -> ?(a & b)", anchor=INSERT)
def gk_a_bwd(b):
    strip = b.conj_map(b.lemma("galois.wn_idem.fwd"), b.lemma("galois.wn_idem.fwd", a="b"))
    return b.chain(b.lemma("sym.wn_and.fwd", a="!?a", b="!?b"), strip, b.lemma("sym.wn_and.bwd"))


@corpus_entry("gk.b.fwd", "?(a | b) -> ?(!?a | !?b)", anchor=INSERT)
def gk_b_fwd(b):
    return b.monotone_wn(b.disj_map(b.axiom("oc_wn", A="a"), b.axiom("oc_wn", A="b")))


@corpus_entry("gk.b.bwd", "?(!?a | !?b) -> ?(a | b)", anchor=INSERT)
def gk_b_bwd(b):
    strip = b.disj_map(b.lemma("galois.wn_idem.fwd"), b.lemma("galois.wn_idem.fwd", a="b"))
    return b.chain(b.lemma("sym.wn_or.fwd", a="!?a", b="!?b"), strip, b.lemma("sym.wn_or.bwd"))


@corpus_entry("gk.c.fwd", "?(exists x. pi(x)) -> ?(exists x. !?pi(x))", anchor=INSERT)
def gk_c_fwd(b):
    return b.monotone_wn(b.ex_map(b.axiom("oc_wn", A="pi(x)"), "x"))


@corpus_entry("gk.c.bwd", "?(exists x. !?pi(x)) -> ?(exists x. pi(x))", anchor=INSERT)
def gk_c_bwd(b):
    out = b.lemma("sym.wn_ex.fwd", pi=b.lam("x", "!?pi(x)"))
    strip = b.ex_map(b.lemma("galois.wn_idem.fwd", a="pi(x)"), "x")
    return b.chain(out, strip, b.lemma("sym.wn_ex.bwd"))


@corpus_entry("gk.d.fwd", "!(p & q) -> !(?!p & ?!q)", anchor=INSERT)
def gk_d_fwd(b):
    wrap = b.conj_map(b.lemma("galois.oc_idem.bwd"), b.lemma("galois.oc_idem.bwd", p="q"))
    return b.chain(b.lemma("sym.oc_and.bwd"), wrap, b.lemma("sym.oc_and.fwd", p="?!p", q="?!q"))


@corpus_entry("gk.d.bwd", "!(?!p & ?!q) -> !(p & q)", anchor=INSERT)
def gk_d_bwd(b):
    return b.monotone_oc(b.conj_map(b.axiom("wn_oc", P="p"), b.axiom("wn_oc", P="q")))


@corpus_entry("gk.e.fwd", "!(forall x. r(x)) -> !(forall x. ?!r(x))", anchor=INSERT)
def gk_e_fwd(b):
    wrap = b.all_map(b.lemma("galois.oc_idem.bwd", p="r(x)"), "x")
    return b.chain(b.lemma("sym.oc_all.bwd"), wrap, b.lemma("sym.oc_all.fwd", r=b.lam("x", "?!r(x)")))


@corpus_entry("gk.e.bwd", "!(forall x. ?!r(x)) -> !(forall x. r(x))", anchor=INSERT)
def gk_e_bwd(b):
    return b.monotone_oc(b.all_map(b.axiom("wn_oc", P="r(x)"), "x"))


@corpus_entry("worst.a.fwd", "?!(?a | ?b) -> ?(!?a | !?b)", anchor=WORST)
def worst_a_fwd(b):
    return b.chain(b.lemma("mg.b.fwd"), b.lemma("sym.wn_or.bwd"), b.lemma("gk.b.fwd"))


@corpus_entry("worst.a.bwd", "?(!?a | !?b) -> ?!(?a | ?b)", anchor=WORST)
def worst_a_bwd(b):
    return b.chain(b.lemma("gk.b.bwd"), b.lemma("sym.wn_or.fwd"), b.lemma("mg.b.bwd"))


@corpus_entry("worst.b.fwd", "?!(exists x. ?pi(x)) -> ?(exists x. !?pi(x))", anchor=WORST)
def worst_b_fwd(b):
    return b.chain(b.lemma("mg.c.fwd"), b.lemma("sym.wn_ex.bwd"), b.lemma("gk.c.fwd"))


@corpus_entry("worst.b.bwd", "?(exists x. !?pi(x)) -> ?!(exists x. ?pi(x))", anchor=WORST)
def worst_b_bwd(b):
    return b.chain(b.lemma("gk.c.bwd"), b.lemma("sym.wn_ex.fwd"), b.lemma("mg.c.bwd"))


@corpus_entry("worst.c.fwd", "!(?!p -> ?!q) -> !?(!p -> !q)", anchor=WORST)
def worst_c_fwd(b):
    unwrap = b.imp_map(b.lemma("galois.oc_idem.bwd"), b.lemma("galois.oc_idem.fwd", p="q"))
    return b.chain(b.axiom("oc_imp", P="?!p", Q="?!q"), unwrap, b.axiom("oc_wn", A="!p -> !q"))


@corpus_entry("worst.c.bwd", "!?(!p -> !q) -> !(?!p -> ?!q)", anchor=WORST)
def worst_c_bwd(b):
    wrap = b.imp_map(b.lemma("galois.oc_idem.fwd"), b.lemma("galois.oc_idem.bwd", p="q"))
    return b.chain(b.lemma("mg.e.fwd"), wrap, b.lemma("move_oc_wn.a.fwd", a="!p", q="?!q"))


@corpus_entry("worst.d.fwd", "!(forall x. ?!r(x)) -> !?(forall x. !r(x))", anchor=WORST)
def worst_d_fwd(b):
    strip = b.all_map(b.lemma("galois.oc_idem.fwd", p="r(x)"), "x")
    return b.chain(b.lemma("sym.oc_all.bwd", r=b.lam("x", "?!r(x)")), strip, b.lemma("mg.f.bwd"))


@corpus_entry("worst.d.bwd", "!?(forall x. !r(x)) -> !(forall x. ?!r(x))", anchor=WORST)
def worst_d_bwd(b):
    wrap = b.all_map(b.lemma("galois.oc_idem.bwd", p="r(x)"), "x")
    return b.chain(b.lemma("mg.f.fwd"), wrap, b.lemma("sym.oc_all.fwd", r=b.lam("x", "?!r(x)")))
