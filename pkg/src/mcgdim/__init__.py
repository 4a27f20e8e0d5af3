"""Exact checks of vcd(WF) + lambda(F) <= vcd(Mod_g^n) for punctured mapping class groups."""
from .dimensions import MappingClassGroup, gd_mcg, vcd_mcg, vcd_spherical_braid
from .orbifold import OrbifoldSignature, nf_values
from .verifier import verify_inequality

__all__ = ["MappingClassGroup", "OrbifoldSignature", "gd_mcg", "nf_values", "vcd_mcg",
           "vcd_spherical_braid", "verify_inequality"]
