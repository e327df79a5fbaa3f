"""Braid-group and fibred-knot computations.

The toolkit builds two parametrized families of braids whose closures are
unknots, certifies the unknotting by replayable Markov-move certificates,
and verifies the algebra of the fibred knots obtained by lifting the braids
to branched double covers: Alexander invariants along independent pipelines,
Garside normal form identities, homological monodromy, Thurston-Veech
pseudo-Anosov certificates, and two-bridge cross-checks.
"""

from .braid import (
    BraidWord,
    FamilySpec,
    FamilyWords,
    FamilyError,
    Permutation,
    build_family,
    closure_components,
    default_phi_extension,
    enhanced_phi,
    enhanced_pi,
    exponent_sum,
    family_braid,
    format_braid_text,
    free_reduce,
    original_phi,
    original_pi,
    parse_braid_text,
    underlying_permutation,
)
from .destab import UnknotCertificate, apply_move, destabilize_greedy, replay_certificate
from .garside import (
    BandGenerator,
    NormalForm,
    delta_word,
    expand_band,
    full_twist,
    normal_form,
    periodic_identity_check,
    verify_band_witness,
    words_equal,
)
from .laurent import LaurentPoly, charpoly, det_laurent
from .invariants import (
    SeifertMatrix,
    SignatureMarginError,
    alexander_from_burau,
    alexander_from_seifert,
    brick_seifert,
    determinant_from_word,
    knot_determinant,
    reduced_burau,
    signature_function,
)

__version__ = "0.1.0"

from .coverlift import (
    BranchedCoverData,
    ChainSurface,
    alexander_module_invariants,
    branched_cover_euler,
    charpoly_int,
    fibred_alexander,
    growth_sequence,
    lift_homological,
    seifert_from_monodromy,
    transvection,
)
from .pacert import (
    Classification,
    MulticurvePair,
    RibbonGraph,
    chain_pair,
    chain_rotation_search,
    classify,
    complement_euler,
    mu,
    parse_twist_word,
    ribbon_faces,
)
from .twobridge import (
    TwoBridgeFraction,
    cf_to_fraction,
    crosscheck_w0,
    twobridge_alexander,
)
from .checks import check_names, run_check
from .report import build_report, canonical_json, validate_report
from .sweep import SweepConfig, parse_config, run_sweep
