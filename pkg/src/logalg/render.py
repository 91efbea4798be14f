"""LaTeX rendering of series and sequence tables, in the row style

    B_{-2}^{\\alpha}(x) = \\lambda_{-2}^{\\alpha}(x) + \\lambda_{-3}^{\\alpha}(x) + ...

Generic order renders the superscript as a literal alpha, polynomial
order as (0).  Output bytes are deterministic for fixed input.
"""

from __future__ import annotations

from fractions import Fraction

from .series import LogSeries, OrderTag

__all__ = ["series_to_latex", "table_to_latex"]

_ROW_SYMBOL = {"bernoulli": "B", "hermite": "H", "laguerre": "L", "harmonic": "\\lambda"}


def _order_sup(order: OrderTag) -> str:
    return "\\alpha" if order is OrderTag.GENERIC else "(0)"


def _term(degree: int, order: OrderTag) -> str:
    return f"\\lambda_{{{degree}}}^{{{_order_sup(order)}}}(x)"


def series_to_latex(p: LogSeries) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for degree, c in p.items():
        body = _term(degree, p.order)
        sign = "-" if c < 0 else "+"
        c_abs = abs(c)
        mag = body if c_abs.numerator == 1 else f"{c_abs.numerator}{body}"
        if c_abs.denominator != 1:
            mag += f"/{c_abs.denominator}"
        if not parts:
            parts.append(f"-{mag}" if sign == "-" else mag)
        else:
            parts.append(f" {sign} {mag}")
    if p.order is OrderTag.GENERIC:
        parts.append(" - \\cdots")
    return "".join(parts)


def table_to_latex(table) -> str:
    sym = _ROW_SYMBOL.get(table.name, table.name)
    lines = ["\\begin{array}{rcl}"]
    for a, series in table.rows:
        sup = _order_sup(series.order)
        label = f"{sym}_{{{a}}}^{{{sup}}}(x)"
        lines.append(f"{label} &=& {series_to_latex(series)} \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)
