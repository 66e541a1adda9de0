# src/corpus/distributivity.py

"""
?! and !? against conjunction, moving ! and ? across implications, and !? as the
Russell-Prawitz modality with its second-order characterisations.
"""

from corpus.registry import corpus_entry

MOVE_BOX = "?! and !? distribute over &"
MOVE_OC = "! and ? move across ->"
RP = "!? is a Russell-Prawitz modality"


@corpus_entry("box_and.fwd", "?!(p & q) -> ?!p & ?!q", anchor=MOVE_BOX)
def box_and_fwd(b):
    return b.syl(b.monotone_wn(b.lemma("sym.oc_and.bwd")), b.lemma("sym.wn_and.fwd", a="!p", b="!q"))


@corpus_entry("box_and.bwd", "?!p & ?!q -> ?!(p & q)", anchor=MOVE_BOX)
def box_and_bwd(b):
    return b.syl(b.lemma("sym.wn_and.bwd", a="!p", b="!q"), b.monotone_wn(b.lemma("sym.oc_and.fwd")))


@corpus_entry("box_or", "?!p | ?!q -> ?!(p | q)", anchor=MOVE_BOX)
def box_or(b):
    return b.syl(b.lemma("sym.wn_or.bwd", a="!p", b="!q"), b.monotone_wn(b.lemma("sym.oc_or")))


@corpus_entry("nabla_and.fwd", "!?(a & b) -> !?a & !?b", anchor=MOVE_BOX)
def nabla_and_fwd(b):
    return b.syl(b.monotone_oc(b.lemma("sym.wn_and.fwd")), b.lemma("sym.oc_and.bwd", p="?a", q="?b"))


@corpus_entry("nabla_and.bwd", "!?a & !?b -> !?(a & b)", anchor=MOVE_BOX)
def nabla_and_bwd(b):
    return b.syl(b.lemma("sym.oc_and.fwd", p="?a", q="?b"), b.monotone_oc(b.lemma("sym.wn_and.bwd")))


@corpus_entry("move_oc_wn.a.fwd", "(!?a -> !q) -> !(?a -> q)", anchor=MOVE_OC)
def move_oc_wn_a_fwd(b):
    split = b.axiom("wn_imp", A="!?a", B="!q")
    narrow = b.imp_map(b.lemma("galois.wn_idem.bwd"), b.axiom("wn_oc", P="q"))
    return b.lemma("galois.fwd", b.syl(split, narrow))


@corpus_entry("move_oc_wn.a.bwd", "!(?a -> q) -> (!?a -> !q)", anchor=MOVE_OC)
def move_oc_wn_a_bwd(b):
    return b.axiom("oc_imp", P="?a", Q="q")


@corpus_entry("move_oc_wn.b1", "(!?a -> !q) -> (a -> !q)", anchor=MOVE_OC)
def move_oc_wn_b1(b):
    return b.imp_map(b.axiom("oc_wn", A="a"), b.identity("!q"))


@corpus_entry("move_oc_wn.b2", "(a -> !q) -> !?(a -> !q)", anchor=MOVE_OC)
def move_oc_wn_b2(b):
    return b.axiom("oc_wn", A="a -> !q")


@corpus_entry("move_oc_wn.b3", "!?(a -> !q) -> (!?a -> !q)", anchor=MOVE_OC)
def move_oc_wn_b3(b):
    spread = b.lemma("nabla.4", b="!q")
    return b.syl(spread, b.imp_map(b.identity("!?a"), b.lemma("galois.oc_idem.fwd", p="q")))


@corpus_entry("move_oc_wn.c.law", "(?a -> ?!q) -> (?a -> q)", anchor=MOVE_OC)
def move_oc_wn_c_law(b):
    return b.imp_map(b.identity("?a"), b.axiom("wn_oc", P="q"))


@corpus_entry("move_oc_wn.c.rule", "?a -> q |- ?a -> ?!q", anchor=MOVE_OC)
def move_oc_wn_c_rule(b):
    return b.lemma("sup_inf.b.prop", b.hyp(1))


@corpus_entry("russell_prawitz.fwd", "!?a -> ((a -> !p) -> !p)", anchor=RP)
def russell_prawitz_fwd(b):
    lift = b.lemma("move_oc_wn.b2", q="p")
    drop = b.lemma("move_oc_wn.b3", q="p")
    h = b.assume("!?a")
    g = b.assume("a -> !p")
    return b.discharge(h, b.discharge(g, b.mp(b.mp(drop, b.mp(lift, g)), h)))


@corpus_entry("russell_prawitz.bwd", "c -> ((a -> !?a) -> !?a) |- c -> !?a", anchor=RP)
def russell_prawitz_bwd(b):
    x = b.assume("c")
    return b.discharge(x, b.mp(b.mp(b.hyp(1), x), b.axiom("oc_wn", A="a")))


@corpus_entry("second_order.a", "!?(a & b) -> ((a -> (b -> !?c)) -> !?c)", anchor=RP)
def second_order_and(b):
    rp = b.lemma("russell_prawitz.fwd", a="a & b", p="?c")
    uncurry = b.lemma("ipc.exp.bwd", c="!?c")
    h = b.assume("!?(a & b)")
    g = b.assume("a -> (b -> !?c)")
    return b.discharge(h, b.discharge(g, b.mp(b.mp(rp, h), b.mp(uncurry, g))))


@corpus_entry("second_order.b", "!?(a | b) -> ((a -> !?c) -> ((b -> !?c) -> !?c))", anchor=RP)
def second_order_or(b):
    rp = b.lemma("russell_prawitz.fwd", a="a | b", p="?c")
    cases = b.axiom("or_e", A="a", B="b", C="!?c")
    h = b.assume("!?(a | b)")
    f = b.assume("a -> !?c")
    g = b.assume("b -> !?c")
    joined = b.mp(b.mp(cases, f), g)
    return b.discharge(h, b.discharge(f, b.discharge(g, b.mp(b.mp(rp, h), joined))))


@corpus_entry("second_order.c", "!?(exists x. pi(x)) -> ((forall x. (pi(x) -> !?c)) -> !?c)", anchor=RP)
def second_order_exists(b):
    rp = b.lemma("russell_prawitz.fwd", a="exists x. pi(x)", p="?c")
    h = b.assume("!?(exists x. pi(x))")
    g = b.assume("forall x. (pi(x) -> !?c)")
    return b.discharge(h, b.discharge(g, b.mp(b.mp(rp, h), b.ex_elim(g))))
