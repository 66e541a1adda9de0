# src/corpus/negation.py

"""
Negation against ? and !: ? and ! preserve negation in one direction, insoluble
problems are exactly those whose ?-image is refuted, and ~ passes through !?.
"""

from corpus.registry import corpus_entry

VSTAR = "? and ! preserve negation"
INSOLUBLE = "insolubility is refutability"
MOVE = "~ moves through !?"


@corpus_entry("vstar.a.law", "?~a -> ~?a", anchor=VSTAR)
def vstar_a_law(b):
    split = b.axiom("wn_imp", A="a", B="bot")
    return b.syl(split, b.imp_map(b.identity("?a"), b.lemma("sym.wn_bot")))


@corpus_entry("vstar.a.rule", "~a |- ~?a", anchor=VSTAR)
def vstar_a_rule(b):
    return b.mp(b.wn(b.hyp(1)), b.lemma("vstar.a.law"))


@corpus_entry("vstar.a.back", "~?bot", anchor=VSTAR)
def vstar_a_back(b):
    return b.lemma("vstar.a.rule", b.identity("bot"))


@corpus_entry("vstar.b.law", "!~p -> ~!p", anchor=VSTAR)
def vstar_b_law(b):
    split = b.axiom("oc_imp", P="p", Q="0")
    return b.syl(split, b.imp_map(b.identity("!p"), b.axiom("oc_bot")))


@corpus_entry("vstar.b.rule", "~p |- ~!p", anchor=VSTAR)
def vstar_b_rule(b):
    return b.mp(b.oc(b.hyp(1)), b.lemma("vstar.b.law"))


@corpus_entry("vstar.b.back", "~!0", anchor=VSTAR)
def vstar_b_back(b):
    return b.lemma("vstar.b.rule", b.identity("0"))


@corpus_entry("insolubility.fwd", "~a -> !~?a", anchor=INSOLUBLE)
def insolubility_fwd(b):
    return b.syl(b.axiom("oc_wn", A="~a"), b.monotone_oc(b.lemma("vstar.a.law")))


@corpus_entry("insolubility.bwd", "!~?a -> ~a", anchor=INSOLUBLE)
def insolubility_bwd(b):
    return b.syl(b.lemma("vstar.b.law", p="?a"), b.contrapose(b.axiom("oc_wn", A="a")))


@corpus_entry("insolubility2", "~?!~?(a | ~a)", anchor=INSOLUBLE)
def insolubility_excluded_middle(b):
    back = b.lemma("insolubility.bwd", a="a | ~a")
    nn = b.lemma("ipc.nnlem")
    h = b.assume("!~?(a | ~a)")
    refuted = b.discharge(h, b.mp(nn, b.mp(back, h)))
    return b.lemma("vstar.a.rule", refuted)


@corpus_entry("move_nabla.fwd", "~!?a -> ~a", anchor=MOVE)
def move_nabla_fwd(b):
    return b.contrapose(b.axiom("oc_wn", A="a"))


@corpus_entry("move_nabla.bwd", "~a -> ~!?a", anchor=MOVE)
def move_nabla_bwd(b):
    spread = b.lemma("nabla.4", b="bot")
    h = b.assume("~a")
    lifted = b.mp(spread, b.mp(b.axiom("oc_wn", A="~a"), h))
    return b.discharge(h, b.syl(lifted, b.lemma("nabla.3")))


@corpus_entry("move_nabla.nabla_fwd", "~a -> !?~a", anchor=MOVE)
def move_nabla_nabla_fwd(b):
    return b.axiom("oc_wn", A="~a")


@corpus_entry("move_nabla.nabla_bwd", "!?~a -> ~a", anchor=MOVE)
def move_nabla_nabla_bwd(b):
    return b.syl(b.monotone_oc(b.lemma("vstar.a.law")), b.lemma("insolubility.bwd"))


@corpus_entry("move_nabla.neg_oc.fwd", "~!?a -> !~?a", anchor=MOVE)
def negated_nabla_fwd(b):
    return b.syl(b.lemma("move_nabla.fwd"), b.lemma("insolubility.fwd"))


@corpus_entry("move_nabla.neg_oc.bwd", "!~?a -> ~!?a", anchor=MOVE)
def negated_nabla_bwd(b):
    return b.lemma("vstar.b.law", p="?a")


@corpus_entry("nabla_negneg1", "!?a -> ~~a", anchor="!? lies below ~~")
def nabla_negneg(b):
    back = b.lemma("move_nabla.bwd")
    h = b.assume("!?a")
    n = b.assume("~a")
    return b.discharge(h, b.discharge(n, b.mp(b.mp(back, n), h)))


@corpus_entry("nabla_negneg1.oc_bot", "!?bot -> ~~bot |- ~!0", anchor="!? lies below ~~")
def nabla_negneg_gives_oc_bot(b):
    h = b.assume("~~bot")
    drop = b.discharge(h, b.mp(h, b.identity("bot")))
    lift = b.monotone_oc(b.axiom("efq", target="0 -> ?bot"))
    return b.chain(lift, b.hyp(1), drop)
