from .main import load_curve, main, run

__all__ = ["load_curve", "main", "run"]
