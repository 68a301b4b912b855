"""Intersection homology of finite stratified simplicial complexes.

Exact (rational) computation of intersection homology in all perversities,
including the boundary-perversity extension to spaces whose boundary is
itself singular, plus a verification harness for duality theorems, local
cone computations and long exact sequences on a catalog of small spaces.
"""

from .perversity import (Perversity, all_perversities, boundary_perversity, complement,
                         new_perversity, parse_perversity, standard_perversity, truncate)
from .complexes import (Chain, SimplicialComplex, barycentric_subdivision, boundary_of_chain,
                        build_complex, simplex_boundary, support)
from .stratified import (SpacePair, StratifiedSpace, attach_filtration, boundary_space,
                         declare_boundary, subdivide_n, subdivide_stratified, validate,
                         validate_pseudomanifold)
from .intersection import (build_bm_complex, build_intersection_complex,
                           build_relative_bm_complex, build_relative_complex,
                           build_relative_open_complex, simplex_allowable)
from .homology import (HomologyResult, betti_numbers, check_exactness, homology_basis,
                       induced_map, long_exact_sequence)
from .constructions import (LocalModel, catalog_names, cone, double, generate_example,
                            local_model, one_point_compactification, pinch,
                            product_with_interval, suspension)

__version__ = "0.1.0"
