"""
Report Generator for origami-veech.
Renders decompositions, Veech groups, certificates and surjectivity sweeps
as plain-text reports. Tables go through pandas.
"""

from datetime import datetime
from typing import Any, Dict, Optional

import pandas as pd


def _matrix(M) -> str:
    return f"({M.a} {M.b}; {M.c} {M.d})"


class ReportGenerator:
    """Generate human-readable reports for the command line."""

    RULE = "=" * 60

    def __init__(self, title: str = "origami-veech"):
        self.title = title

    def _header(self, subject: str) -> list:
        return [
            self.RULE,
            f"{self.title}: {subject}",
            f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}",
            self.RULE,
        ]

    @staticmethod
    def _table(df: pd.DataFrame) -> str:
        if df.empty:
            return "(empty)"
        return df.to_string(index=False)

    def origami_section(self, summary: Dict[str, Any]) -> list:
        """Invariant lines for an origami summary from origami_summary()."""
        angles = ", ".join(f"{k}: {v}" for k, v in summary["cone_angles"].items())
        return [
            f"squares: {summary['squares']}",
            f"ord(x)={summary['ord_x']} ord(y)={summary['ord_y']} "
            f"ord(xy)={summary['ord_xy']} ord(xy^-1)={summary['ord_xy_inv']}",
            f"cone angles (k: count): {angles}",
            f"genus: {summary['genus']}",
        ]

    def cylinder_report(self, decomposition, summary: Optional[Dict[str, Any]] = None) -> str:
        """
        Report one cylinder decomposition.

        Each cylinder is a row "w=<w> h=<h> inverse_modulus=<w/h>".
        """
        lines = self._header(f"cylinders in direction {tuple(decomposition.direction)}")
        if summary is not None:
            lines += self.origami_section(summary)
        lines.append(f"A = {_matrix(decomposition.A)}")
        lines.append(f"cylinders: {len(decomposition.cylinders)}")
        for cylinder in decomposition.cylinders:
            lines.append(f"w={cylinder.w} h={cylinder.h} inverse_modulus={cylinder.inverse_modulus}")
        lines.append(f"parabolic = {_matrix(decomposition.parabolic)}")
        return "\n".join(lines)

    def veech_report(self, veech) -> str:
        """Report index, generators, cusp widths and level."""
        lines = self._header("Veech group")
        lines.append(f"index {veech.index}")
        generators = pd.DataFrame({
            "word": [str(w) for w in veech.generators],
            "generator": [w.pretty() for w in veech.generators],
            "matrix": [_matrix(M) for M in veech.matrices],
        })
        lines.append(f"generators: {len(veech.generators)}")
        lines.append(self._table(generators))
        lines.append(f"cusp widths: {list(veech.cusp_widths)}")
        lines.append(f"level {veech.level}")
        return "\n".join(lines)

    def certificate_report(self, certificate) -> str:
        """Report a certificate, or the failure of the criterion when None."""
        lines = self._header("non-congruence certificate")
        if certificate is None:
            lines.append("criterion not satisfied")
            lines.append("(the criterion is sufficient only; nothing is claimed about congruence)")
            return "\n".join(lines)
        witnesses = pd.DataFrame({
            "p": [w.p for w in certificate.witnesses],
            "case": [w.case for w in certificate.witnesses],
            "A1": [_matrix(w.A1) for w in certificate.witnesses],
            "A2": [_matrix(w.A2) for w in certificate.witnesses],
            "m1": [w.m1 for w in certificate.witnesses],
            "m2": [w.m2 for w in certificate.witnesses],
        })
        lines.append(f"certified ({certificate.method}): totally non-congruence")
        lines.append(self._table(witnesses))
        lines.append(f"primes not dividing |G|: {certificate.residual_primes}")
        return "\n".join(lines)

    def surjectivity_report(self, table: pd.DataFrame) -> str:
        """Report a sweep from surjectivity_table()."""
        lines = self._header("surjectivity onto SL(2,Z/nZ)")
        lines.append(self._table(table))
        if not table.empty:
            lines.append(f"surjective for all n: {bool(table['surjects'].all())}")
        return "\n".join(lines)
