"""Binary morphisms and the antipalindromic structure of their fixed points."""

from .errors import (
    AntipalError,
    BadBounds,
    CertificationExceeded,
    ConsistencyError,
    CyclicMorphism,
    EmptyWordError,
    EquationFails,
    HypothesisNotMet,
    NoCommonRoot,
    NoNormalForm,
    NoSolution,
    NotAConjugacyWord,
    NotAntipalindrome,
    NotCommuting,
    NotInThetaImage,
    NotPrimitive,
    NotProlongable,
    ParseError,
    PreconditionViolated,
    UnstableLength,
)
from .words import (
    ThetaFactorization,
    Word,
    check_word,
    complement,
    exchange,
    is_antipalindrome,
    is_palindrome,
    longest_antipalindrome,
    parse_word,
    primitive_root,
    reverse,
    s_map,
    smallest_period,
    theta_apply,
    theta_decode,
    theta_factorize,
)
from .equations import (
    CommutationSolution,
    PalAntipalSolution,
    TransferSolution,
    antipal_periodic_normal_form,
    decompose_two_antipalindromes,
    decompose_two_palindromes,
    fine_wilf_root,
    solve_commutation,
    solve_pal_antipal,
    solve_transfer,
)
from .morphisms import (
    ConjugacyChain,
    FrequencyVector,
    Morphism,
    apply,
    compose,
    conjugacy_chain,
    conjugate_by,
    fixed_point_prefix,
    format_morphism,
    incidence,
    is_primitive,
    is_uniform,
    letter_frequencies,
    parse_morphism,
    prolongable_letters,
    square,
)
from .membership import (
    A1Witness,
    A2Witness,
    ClassificationReport,
    EPSuffixWitness,
    EPWitness,
    EvidenceConfig,
    PWitness,
    a1_palindromicity,
    a1_witnesses,
    a2_palindromicity,
    a2_rebalance,
    a2_witnesses,
    classify,
    conjugate_to_a1,
    conjugate_to_p,
    ep_suffix_witnesses,
    ep_witnesses,
    in_class_a1,
    in_class_a2,
    in_class_ep,
    in_class_p,
    p_witnesses,
    witness_from_dict,
)
from .language import (
    BispecialOrbit,
    CensusRow,
    FactorIndex,
    bispecial_orbit,
    bispecial_successor,
    build_index,
    q_antipalindrome_check,
)

__version__ = "0.1.0"
