"""Polygon and graph realizations of the generalized cluster complexes of types A, B, D, I2(a)."""
from .dissections import (
    BLUE,
    RED,
    Dissection,
    PolygonModel,
    TypeA,
    TypeB,
    TypeD,
    crosses,
    enumerate_a,
    enumerate_b,
    enumerate_d,
    face_regions,
    fixed_a,
    fixed_b,
    fixed_d,
    gamma_d,
    is_s_divisible,
    iter_all_noncrossing,
    polygon_model,
    rotate_a,
    rotate_b,
    rotate_plain,
    split_t,
)
from .bijections import (
    BijectionError,
    BijectionImage,
    bijection_a,
    bijection_a_inverse,
    bijection_b,
    bijection_b_inverse,
    bijection_d_t0,
    bijection_d_t0_inverse,
    bijection_d_t1,
    bijection_d_t1_inverse,
    iter_images,
    t1_shapes,
)
from .i2 import I2Graph, build_i2, fixed_i2, fixed_i2_vertices
from .trees import (
    NotANoncrossingTree,
    enumerate_trees,
    nc_tree_to_quadrangulation,
    quadrangulation_to_nc_tree,
    rotate_quadrangulation,
    rotate_tree,
)
