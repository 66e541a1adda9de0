# src/corpus/galois.py

"""
? and ! as a Galois connection between problems and propositions, and the
bounds it puts on ?! and !?.
"""

from corpus.registry import corpus_entry

ANCHOR = "Galois connection of ? and !"


@corpus_entry("galois.fwd", "?a -> p |- a -> !p", anchor=ANCHOR)
def galois_fwd(b):
    return b.syl(b.axiom("oc_wn", A="a"), b.monotone_oc(b.hyp(1)))


@corpus_entry("galois.bwd", "a -> !p |- ?a -> p", anchor=ANCHOR)
def galois_bwd(b):
    return b.syl(b.monotone_wn(b.hyp(1)), b.axiom("wn_oc", P="p"))


@corpus_entry("oc_reverse", "!p |- p", anchor="the rule for ! can be reversed")
def oc_reverse(b):
    return b.mp(b.wn(b.hyp(1)), b.axiom("wn_oc", P="p"))


@corpus_entry("galois.oc_idem.fwd", "!?!p -> !p", anchor=ANCHOR)
def oc_idempotent_fwd(b):
    return b.monotone_oc(b.axiom("wn_oc", P="p"))


@corpus_entry("galois.oc_idem.bwd", "!p -> !?!p", anchor=ANCHOR)
def oc_idempotent_bwd(b):
    return b.axiom("oc_wn", A="!p")


@corpus_entry("galois.wn_idem.fwd", "?!?a -> ?a", anchor=ANCHOR)
def wn_idempotent_fwd(b):
    return b.axiom("wn_oc", P="?a")


@corpus_entry("galois.wn_idem.bwd", "?a -> ?!?a", anchor=ANCHOR)
def wn_idempotent_bwd(b):
    return b.monotone_wn(b.axiom("oc_wn", A="a"))


# ?!p is the largest proposition below p that is a ?-image; !?a the smallest problem above a

@corpus_entry("sup_inf.a.prop", "?!p -> p", anchor="?! and !? as inf and sup")
def sup_inf_a_prop(b):
    return b.axiom("wn_oc", P="p")


@corpus_entry("sup_inf.a.prob", "a -> !?a", anchor="?! and !? as inf and sup")
def sup_inf_a_prob(b):
    return b.axiom("oc_wn", A="a")


@corpus_entry("sup_inf.b.prop", "?a -> p |- ?a -> ?!p", anchor="?! and !? as inf and sup")
def sup_inf_b_prop(b):
    return b.monotone_wn(b.lemma("galois.fwd", b.hyp(1)))


@corpus_entry("sup_inf.b.prob", "a -> !p |- !?a -> !p", anchor="?! and !? as inf and sup")
def sup_inf_b_prob(b):
    return b.monotone_oc(b.lemma("galois.bwd", b.hyp(1)))
