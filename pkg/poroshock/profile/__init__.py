from poroshock.profile.speed import rh_speed
from poroshock.profile.solve import solve_profile, vacuum_slope
from poroshock.profile.verify import free_boundary_slope, verify_profile
from poroshock.profile.export import export_profile, profile_table
from poroshock.models.profile import ShockProfile


def profile_value(profile: ShockProfile, xi):
    """U(xi): exactly 0 right of x_R and exactly u_- left of the first knot."""
    return profile.value(xi)


__all__ = [
    "export_profile",
    "free_boundary_slope",
    "profile_table",
    "profile_value",
    "rh_speed",
    "solve_profile",
    "vacuum_slope",
    "verify_profile",
]
