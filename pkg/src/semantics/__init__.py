from .kripke import KripkeModel, model_check
from .tableau import Valid, Countermodel, decide_s4, valid_s4
from .oracle import preorders, find_countermodel, valid_up_to
from .minimise import minimise_countermodel, filtrate, generated_submodel
from .refuter import (
    Invalid, Refutation, Unknown, CHANNELS, decide_ipc, entails_s4, entails_ipc, refute_qhc,
    all_channels,
)
