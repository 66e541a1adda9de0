# src/corpus/stability.py

"""
Stability and decidability transferred between problems and propositions, in
their internal (implication) forms.

A problem a is stable when ~~a -> a and decidable when a | ~a; a proposition p is
stable when ~!~p -> !p and decidable when !p | !~p. The semi- variants put the
same formula under ?.
"""

from corpus.registry import corpus_entry

TRANSFER = "stability and decidability pass through ? and !"
MORE = "stability and decidability, further transfers"
NEGNEG = "!? agrees with ~~ exactly on semi-stable problems"
COMMUTE = "when ~ commutes with ? and !"
SEMI = "semi-stability and semi-decidability"


def _negneg_map(b, ref):
    """A -> B gives ~~A -> ~~B."""
    return b.contrapose(b.contrapose(ref))


@corpus_entry("sd.a.stable", "(~!~p -> !p) -> (~~!p -> !p)", anchor=TRANSFER)
def sd_a_stable(b):
    return b.imp_map(b.contrapose(b.lemma("vstar.b.law")), b.identity("!p"))


@corpus_entry("sd.a.decidable", "!p | !~p -> !p | ~!p", anchor=TRANSFER)
def sd_a_decidable(b):
    return b.disj_map(b.identity("!p"), b.lemma("vstar.b.law"))


@corpus_entry("sd.a.stable_conv", "(~~!?a -> !?a) -> (~!~?a -> !?a)", anchor=TRANSFER)
def sd_a_stable_conv(b):
    return b.imp_map(b.contrapose(b.lemma("move_nabla.neg_oc.fwd")), b.identity("!?a"))


@corpus_entry("sd.a.decidable_conv", "!?a | ~!?a -> !?a | !~?a", anchor=TRANSFER)
def sd_a_decidable_conv(b):
    return b.disj_map(b.identity("!?a"), b.lemma("move_nabla.neg_oc.fwd"))


@corpus_entry("sd.b.stable", "(~~a -> a) -> (~!~?a -> !?a)", anchor=TRANSFER)
def sd_b_stable(b):
    lift = b.imp_map(b.contrapose(b.lemma("move_nabla.bwd")), b.axiom("oc_wn", A="a"))
    return b.syl(lift, b.lemma("sd.a.stable_conv"))


@corpus_entry("sd.b.decidable", "a | ~a -> !?a | !~?a", anchor=TRANSFER)
def sd_b_decidable(b):
    return b.disj_map(b.axiom("oc_wn", A="a"), b.lemma("insolubility.fwd"))


@corpus_entry("sd.b.stable_conv", "(~!~?!p -> !?!p) -> (~~!p -> !p)", anchor=TRANSFER)
def sd_b_stable_conv(b):
    unwrap = b.imp_map(_negneg_map(b, b.lemma("galois.oc_idem.bwd")), b.lemma("galois.oc_idem.fwd"))
    return b.syl(b.lemma("sd.a.stable", p="?!p"), unwrap)


@corpus_entry("sd.b.decidable_conv", "!?!p | !~?!p -> !p | ~!p", anchor=TRANSFER)
def sd_b_decidable_conv(b):
    unwrap = b.disj_map(b.lemma("galois.oc_idem.fwd"), b.contrapose(b.lemma("galois.oc_idem.bwd")))
    return b.syl(b.lemma("sd.a.decidable", p="?!p"), unwrap)


@corpus_entry("sd.dec_stable", "!p | !~p -> (~!~p -> !p)", anchor="decidable propositions are stable")
def decidable_is_stable(b):
    return b.lemma("ipc.ornot", a="!p", b="!~p")


@corpus_entry("sd2.a", "~!~~?a -> !~?a", anchor=MORE)
def sd2_a(b):
    widen = b.contrapose(b.monotone_oc(b.lemma("cpc.dni", p="?a")))
    return b.syl(widen, b.lemma("move_nabla.neg_oc.fwd"))


@corpus_entry("sd2.b", "(~~a -> a) -> (!?a | !~?a -> a | ~a)", anchor=MORE)
def sd2_b(b):
    stable = b.assume("~~a -> a")
    left = b.syl(b.lemma("nabla_negneg1"), stable)
    return b.discharge(stable, b.disj_map(left, b.lemma("insolubility.bwd")))


@corpus_entry("sd2.c", "(~!~~p -> !~p) -> (!p | ~!p -> !p | !~p)", anchor=MORE)
def sd2_c(b):
    stable = b.assume("~!~~p -> !~p")
    narrow = b.contrapose(b.monotone_oc(b.axiom("dne", A="p")))
    right = b.syl(narrow, stable)
    return b.discharge(stable, b.disj_map(b.identity("!p"), right))


@corpus_entry("nabla_negneg2.fwd", "(~~a <-> !?a) -> (~!~?a -> !?a)", anchor=NEGNEG)
def nabla_negneg2_fwd(b):
    equal = b.assume("~~a <-> !?a")
    lower = b.contrapose(b.lemma("insolubility.fwd"))
    return b.discharge(equal, b.syl(lower, b.left(equal)))


@corpus_entry("nabla_negneg2.bwd", "(~!~?a -> !?a) -> (~~a <-> !?a)", anchor=NEGNEG)
def nabla_negneg2_bwd(b):
    stable = b.assume("~!~?a -> !?a")
    up = b.syl(b.contrapose(b.lemma("insolubility.bwd")), stable)
    return b.discharge(stable, b.iff(up, b.lemma("nabla_negneg1")))


@corpus_entry("nc.a.fwd", "?(a | ~a) -> (~?a -> ?~a)", anchor=COMMUTE)
def negation_commutes_a_fwd(b):
    split = b.lemma("sym.wn_or.fwd", b="~a")
    ds = b.lemma("cpc.ds", p="?a", q="?~a")
    h = b.assume("?(a | ~a)")
    n = b.assume("~?a")
    return b.discharge(h, b.discharge(n, b.mp(ds, b.conj(b.mp(split, h), n))))


@corpus_entry("nc.a.bwd", "(~?a -> ?~a) -> ?(a | ~a)", anchor=COMMUTE)
def negation_commutes_a_bwd(b):
    lem = b.lemma("cpc.lem", p="?a")
    join = b.lemma("sym.wn_or.bwd", b="~a")
    f = b.assume("~?a -> ?~a")
    either = b.mp(b.disj_map(b.identity("?a"), f), lem)
    return b.discharge(f, b.mp(join, either))


@corpus_entry("nc.b.fwd", "(~!~~p -> !~p) -> (~!p -> !~p)", anchor=COMMUTE)
def negation_commutes_b_fwd(b):
    stable = b.assume("~!~~p -> !~p")
    narrow = b.contrapose(b.monotone_oc(b.axiom("dne", A="p")))
    return b.discharge(stable, b.syl(narrow, stable))


@corpus_entry("nc.b.bwd", "(~!p -> !~p) -> (~!~~p -> !~p)", anchor=COMMUTE)
def negation_commutes_b_bwd(b):
    commute = b.assume("~!p -> !~p")
    widen = b.contrapose(b.monotone_oc(b.lemma("cpc.dni")))
    return b.discharge(commute, b.syl(widen, commute))


@corpus_entry("ssd.a.law", "!?(~!~p -> !p) -> (~!~p -> !p)", anchor=SEMI)
def semi_stable_law(b):
    drop = b.lemma("move_oc_wn.b3", a="~!~p", q="p")
    return b.syl(drop, b.imp_map(b.axiom("oc_wn", A="~!~p"), b.identity("!p")))


@corpus_entry("ssd.a", "?(~!~p -> !p) |- ~!~p -> !p", anchor=SEMI)
def semi_stable_is_stable(b):
    return b.mp(b.oc(b.hyp(1)), b.lemma("ssd.a.law"))


@corpus_entry("ssd.a.conv", "~!~p -> !p |- ?(~!~p -> !p)", anchor=SEMI)
def stable_is_semi_stable(b):
    return b.wn(b.hyp(1))


@corpus_entry("ssd.b.fwd", "?(!?a | !~?a) -> ?(a | ~a)", anchor=SEMI)
def semi_decidable_fwd(b):
    split = b.lemma("sym.wn_or.fwd", a="!?a", b="!~?a")
    strip = b.disj_map(b.lemma("galois.wn_idem.fwd"), b.monotone_wn(b.lemma("insolubility.bwd")))
    return b.chain(split, strip, b.lemma("sym.wn_or.bwd", b="~a"))


@corpus_entry("ssd.b.bwd", "?(a | ~a) -> ?(!?a | !~?a)", anchor=SEMI)
def semi_decidable_bwd(b):
    return b.monotone_wn(b.lemma("sd.b.decidable"))


@corpus_entry("nabla_stable_decidable", "!?(!p | !~p) -> (~!~p -> !p)", anchor=SEMI)
def nabla_stable_decidable(b):
    return b.syl(b.monotone_nabla(b.lemma("sd.dec_stable")), b.lemma("ssd.a.law"))


@corpus_entry("pushout", "!?(!?a | ~!?a) -> (!?a <-> ~~a)", anchor="!? against ~~ under semi-decidability")
def pushout(b):
    to_iff = b.chain(b.monotone_nabla(b.lemma("sd.a.decidable_conv")),
                     b.lemma("nabla_stable_decidable", p="?a"),
                     b.lemma("nabla_negneg2.bwd"))
    h = b.assume("!?(!?a | ~!?a)")
    return b.discharge(h, b.swap_iff(b.mp(to_iff, h)))
