from .translate import (
    Translation, TRANSLATIONS, get_translation, box_translate, negneg_translate, kuroda_translate,
    nabla_translate, diamond_translate, embed_qs4, embed_qh4, unembed_qs4, unembed_qh4,
    subst_nabla_negneg,
)
