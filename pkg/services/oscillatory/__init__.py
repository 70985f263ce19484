from services.oscillatory.decay import stationary_decay_fit
from services.oscillatory.extension import ExtensionField, extension_eval, extension_field, grid_norm
from services.oscillatory.fits import LogLogFit, loglog_fit
from services.oscillatory.functions import (
    FunctionFamily,
    GaussianBump,
    Indicator,
    family,
    knapp_function,
    lp_norm,
    weighted_lp_norm,
)
from services.oscillatory.grid import GridSpec, check_aliasing, check_cell_phase, dual_box, required_nodes
from services.oscillatory.knapp import (
    KnappPacket,
    PacketSum,
    knapp_packets,
    knapp_ratio,
    knapp_scaling_fit,
    unweighted_knapp_growth,
)
from services.oscillatory.search import SearchResult, norm_ratio, norm_ratio_search
