"""m-Cayley graph constructions, automorphism computation, and exhaustive
m-GRR / m-DRR searches over small finite groups."""

__version__ = "0.1.0"

from .digraph import Digraph, DigraphError
from .groups import FiniteGroup, GroupError, make_group
from .codec import CodecError, decode, encode, encode_d6, encode_g6
from .autgroup import (
    BudgetExceeded,
    automorphism_group,
    are_isomorphic,
    canonical_form,
    certificate,
    embedded_action,
    is_semiregular,
)
from .constructions import (
    ConnectionData,
    ConstructionError,
    MCayleySpec,
    bicay,
    cayley,
    coset_digraph,
    delta_cyclic,
    delta_q8,
    elementary_abelian_lift,
    m_cayley,
    section5_fixture,
    sigma_z2z2,
    theta_general,
    theta_grr,
)
from .presets import PresetDataError, preset, preset_row_for
from .verify import (
    Verdict,
    check_lemma_prel,
    classification_oracle,
    grr_search,
    grr_set_admissible,
    is_m_drr,
    is_m_grr,
    theta_case_select,
)

__all__ = [name for name in dir() if not name.startswith("_")]
