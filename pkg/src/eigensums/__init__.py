"""Graph spectra, eigenvalue-sum bound audits, and lattice certificates."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    GraphError,
    LatticeEmbedding,
    adjacency_matrix,
    complement,
    from_edge_list,
    gen_complete,
    gen_cycle,
    gen_join,
    gen_lattice_subgraph,
    gen_path,
    gen_random_connected,
    gen_star,
    is_connected,
    laplacian,
    normalized_laplacian,
    read_edge_list,
    read_lattice_file,
    validate_embedding,
    write_edge_list,
    write_lattice_file,
    zagreb_index,
)
from .spectra import (
    ConsistencyError,
    EigensolverError,
    RieszValue,
    Spectrum,
    closed_form,
    eig_sym,
    laplacian_energy,
    magnitude_order,
    partial_power_sum,
    partial_sum,
    riesz_mean,
    spectrum,
    spectrum_to_csv,
    trace_identity_report,
)
from .reports import BoundReport, evaluate, report_to_dict
from .basis_bounds import (
    degree_averaged_pair_bounds,
    fiedler_bounds,
    l_sum_bound,
    l_sum_second_line,
    pair_sum_bounds,
    quad_form_diag,
    reduced_basis,
    select_subset,
    subset_objective,
)
from .avg_bounds import (
    PairSet,
    TrialFamily,
    adjacency_square_bound,
    adjacency_sum_bounds,
    averaged_principle_check,
    laplacian_pairsum_bound,
    normalized_pairsum_bound,
    normalized_square_bound,
    pair_difference_family,
    select_pairs_adjacency_square,
    select_pairs_laplacian,
    select_pairs_normalized,
)
from .lattice_bounds import (
    DimensionVerdict,
    collinear_counts,
    embeddability_certificate,
    karamata_check,
    karamata_transform_bound,
    le_lower_bound,
    riesz_lower_bound,
    riesz_lower_bound_at_a,
    simple_sum_bound,
    sinc,
    verify_embedding,
    weyl_power_bound,
    weyl_sequence,
    weyl_sq_bound,
    weyl_sum_bound,
    weyl_sum_bound_at_a,
)
