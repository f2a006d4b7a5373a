"""Exact polyhedral computation: rational LP, cone rays, polytope pipeline."""

from .cones import Cone, Ray, extreme_rays
from .linprog import INFEASIBLE, OPTIMAL, UNBOUNDED, LPResult, lp_solve
from .polytope import (
    HRep,
    LinearConstraint,
    MembershipReport,
    Polytope,
    VRep,
    build_polytope,
    contraction_check,
    density_domain_check,
    facet_inequalities,
    fundamental_normal_cones,
    member_hrep,
    member_majorization,
    minimize_linear,
    remove_redundant,
)

__all__ = [
    "Cone",
    "Ray",
    "extreme_rays",
    "LPResult",
    "lp_solve",
    "OPTIMAL",
    "INFEASIBLE",
    "UNBOUNDED",
    "HRep",
    "VRep",
    "LinearConstraint",
    "MembershipReport",
    "Polytope",
    "build_polytope",
    "contraction_check",
    "density_domain_check",
    "facet_inequalities",
    "fundamental_normal_cones",
    "member_hrep",
    "member_majorization",
    "minimize_linear",
    "remove_redundant",
]
