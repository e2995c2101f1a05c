from .assessment_client import AssessmentClient

__all__ = ["AssessmentClient"]
