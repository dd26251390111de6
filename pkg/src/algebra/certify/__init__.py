from .models import CertificateModel
from .service import build_certificate, dumps_certificate, loads_certificate, roundtrip_serialize, verify_certificate
from .types import CertificateMeta, FactorizationCertificate, Verdict

__all__ = [
    "FactorizationCertificate",
    "CertificateMeta",
    "CertificateModel",
    "Verdict",
    "build_certificate",
    "verify_certificate",
    "dumps_certificate",
    "loads_certificate",
    "roundtrip_serialize",
]
