from .bounds import RepulsionBound, TableRow, Variant, WeightSpec
from .certificates import CaseCertificate, Check, ExponentTerm, ScaledWeight
from .fields import AbelianField, FieldKind, FieldSignature, SearchRecord, Survey
from .reports import Report
from .sums import PowerSumInstance

__all__ = (
    "AbelianField",
    "CaseCertificate",
    "Check",
    "ExponentTerm",
    "FieldKind",
    "FieldSignature",
    "PowerSumInstance",
    "RepulsionBound",
    "Report",
    "ScaledWeight",
    "SearchRecord",
    "Survey",
    "TableRow",
    "Variant",
    "WeightSpec",
)
