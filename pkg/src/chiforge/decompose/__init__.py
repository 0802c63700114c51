"""Structure theorems as certified coloring algorithms."""

from chiforge.decompose.apex import color_apex, color_k5_free
from chiforge.decompose.certificate import (
    Block,
    BoundedColoring,
    DecompositionCertificate,
    certificate_document,
    check_document,
    verify_certificate,
)
from chiforge.decompose.diamond import (
    DiamondContext,
    color_hvn_free,
    color_k5e_free,
    diamond_context,
    lemma_violations,
)
from chiforge.decompose.gem import C5Classes, GemOutcome, classify_c5, color_gem_free, decompose_gem
from chiforge.decompose.verify import DISPATCH, BoundReport, verify_class_bound
from chiforge.decompose.wagon import color_2k2, color_p2p4, color_wagon
from chiforge.decompose.wheel import C4Classes, WheelOutcome, classify_c4, color_wheel_free, decompose_wheel

__all__ = [
    "Block", "BoundReport", "BoundedColoring", "C4Classes", "C5Classes", "DISPATCH",
    "DecompositionCertificate", "DiamondContext", "GemOutcome", "WheelOutcome",
    "certificate_document", "check_document", "classify_c4", "classify_c5",
    "color_2k2", "color_apex", "color_gem_free", "color_hvn_free", "color_k5_free",
    "color_k5e_free", "color_p2p4", "color_wagon", "color_wheel_free", "decompose_gem",
    "decompose_wheel", "diamond_context", "lemma_violations", "verify_certificate",
    "verify_class_bound",
]
