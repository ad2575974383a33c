from src.core.models.class_c_report import ClassCReport
from src.core.models.identity_report import IdentityKind, IdentityReport, IdentitySummary
from src.core.models.matrix_payload import MatrixPayload
from src.core.models.run_config import Command, RunConfig, ScanFamily
from src.core.models.scan_record import SCAN_COLUMNS, ScanRecord
from src.core.models.schatten_report import BoundKind, SchattenReport, Verdict
from src.core.models.spectral_payload import SpectralMeasurePayload
from src.core.models.trig_poly_payload import TrigPolyPayload

__all__ = [
    "SCAN_COLUMNS",
    "BoundKind",
    "ClassCReport",
    "Command",
    "IdentityKind",
    "IdentityReport",
    "IdentitySummary",
    "MatrixPayload",
    "RunConfig",
    "ScanFamily",
    "ScanRecord",
    "SchattenReport",
    "SpectralMeasurePayload",
    "TrigPolyPayload",
    "Verdict",
]
