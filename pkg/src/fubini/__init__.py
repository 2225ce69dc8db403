"""fubini: exact Schubert calculus on Fubini words.

Word combinatorics, pattern-matrix elimination over exact fields,
word-indexed Schubert polynomials, the generalized coinvariant quotients
with their standard monomial and Schubert bases, and the q-series and
Frobenius identities tying them together, all in exact integer or
rational arithmetic.
"""

from .qseries import (
    QPoly,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    q_stirling,
    rev_q,
)
from .words import (
    Perm,
    Word,
    bar_growth,
    convexify,
    dimension_stat,
    enumerate_fubini,
    enumerate_tail,
    enumerate_words_s,
    in_wnk,
    initial_positions,
    is_convex,
    is_fubini,
    mahonian_closed_form,
    mahonian_distribution,
    pi_of,
    sigma_factorization,
    sigma_of,
    standardize,
    star_growth,
    word_act,
)
from .polyring import (
    MultiPoly,
    act,
    complete_sym,
    demazure_char,
    divided_difference,
    elem_sym,
    reverse_vars,
)
from .schubert import (
    circledast,
    circledast_check,
    double_schubert,
    dual_stable_check,
    dual_stable_tower,
    grassmannian_shape,
    one_times_word,
    schubert_perm,
    schubert_word,
    stanley_report,
    stanley_truncation,
)
from .cells import (
    PatternMatrix,
    RankFunction,
    bruhat_reference,
    cell_codimension,
    cell_dimension,
    closure_leq_convex,
    omega_cells,
    omega_pattern_matrix,
    pattern_matrix,
    rank_convex_representative,
    rank_function,
    u_group_star_positions,
)
from .fieldlab import (
    Field,
    FieldMatrix,
    QQ,
    canonicalize,
    count_X,
    count_Y,
    enumerate_M,
    verify_free_action,
)
from .symfunc import (
    SchurExpansion,
    cycle_type,
    des,
    grfrob_R,
    grfrob_T,
    hilbert_from_frobenius,
    irr_character,
    maj,
    num_syt,
    partitions_of,
    schur_poly,
    syt,
)
from .quotient import (
    RingSpec,
    groebner_oracle,
    hilbert_series,
    ideal_generators,
    ideal_member,
    normal_form,
    oracle_normal_form,
    oracle_standard_monomials,
    schubert_expand,
    skip_composition,
    skip_data,
    skip_monomial,
    standard_monomial_basis,
    structure_constants,
)

__version__ = "0.1.0"
