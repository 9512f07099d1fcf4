# Identity catalog and runner
from .models import CheckStatus, IdentityCheck, VerificationReport, Witness
from .runner import run, run_all

__all__ = ['CheckStatus', 'IdentityCheck', 'VerificationReport', 'Witness', 'run', 'run_all']
