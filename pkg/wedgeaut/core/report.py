# wedgeaut/core/report.py
"""
Rendering of factor reports: JSON (fixed key order) and text (jinja2 template).
"""

from pathlib import Path
from typing import Any, Dict, List

import jinja2

from .models import FactorKind, FactorRecord, FactorReport
from .reducibility import CRITERION

# 📁 templates ship inside the package
TEMPLATES_DIR = Path(__file__).parent.parent / "templates"

ALIASES = {
    'text': 'report/text.txt.j2',
    'basis': 'report/basis.txt.j2',
    'config': 'config/config.yaml.j2',
}


def factor_to_dict(f: FactorRecord) -> Dict[str, Any]:
    return {
        "kind": f.kind.value,
        "summand": f.summand,
        "commutator": f.commutator.render() if f.commutator is not None else None,
        "multidegree": list(f.multidegree) if f.multidegree is not None else None,
        "multiplicity": f.multiplicity,
        "target": f.target.render() if f.target is not None else None,
        "order": f.order.to_json(),
        "rule": f.rule.value,
    }


def report_to_dict(report: FactorReport, explain: bool = False) -> Dict[str, Any]:
    """JSON document for a report. Trivial factors are listed only with `explain`."""
    listed = report.factors if explain else report.nontrivial_factors
    return {
        "input": [s.render() for s in report.input.summands],
        "reducibility": {
            "mode": report.mode.value,
            "criterion": CRITERION,
            "pairs": [p.to_dict() for p in report.reducibility.pairs],
        },
        "total": report.total.to_json(),
        "factors": [factor_to_dict(f) for f in listed],
        "omitted_trivial": report.omitted_trivial,
        "notes": [n.to_dict() for n in report.notes],
        "weight_bound": report.weight_bound,
        "pruned_commutators": report.pruned_commutators,
        "missing_entries": [{"source": s, "target": t} for s, t in report.missing_entries],
    }


def factor_label(report: FactorReport, f: FactorRecord) -> str:
    space = report.input.summands[f.summand - 1]
    if f.kind is FactorKind.AUT_SUMMAND:
        return f"Aut({space})"
    return f"[{space}, {f.target}]"


def commutator_label(f: FactorRecord) -> str:
    if f.commutator is not None:
        return f"c = {f.commutator}"
    if f.multidegree is None:
        return ""
    degree = ",".join(str(m) for m in f.multidegree)
    return f"{f.multiplicity} x c of multidegree ({degree})"


class ReportRenderer:
    def __init__(self, templates_dir: Path = TEMPLATES_DIR):
        self.env = self._create_jinja_env(templates_dir)

    def _create_jinja_env(self, templates_dir: Path) -> jinja2.Environment:
        loader = jinja2.FileSystemLoader(str(templates_dir))
        return jinja2.Environment(loader=loader, autoescape=False, trim_blocks=True, lstrip_blocks=True)

    def render(self, template: str, **context: Any) -> str:
        template = ALIASES.get(template, template)
        try:
            tmpl = self.env.get_template(template)
        except jinja2.TemplateNotFound:
            raise FileNotFoundError(f"Template not found: {template}")
        return tmpl.render(**context).rstrip() + "\n"

    def render_report(self, report: FactorReport, explain: bool = False) -> str:
        listed = report.factors if explain else report.nontrivial_factors
        rows: List[Dict[str, Any]] = [
            {
                "label": factor_label(report, f),
                "kind": f.kind.value,
                "commutator": commutator_label(f),
                "order": str(f.order),
                "rule": f.rule.value,
            }
            for f in listed
        ]
        return self.render(
            'text',
            wedge=report.input.render(),
            total=str(report.total),
            mode=report.mode.value,
            criterion=CRITERION,
            pairs=report.reducibility.pairs,
            factors=rows,
            explain=explain,
            omitted=report.omitted_trivial,
            weight_bound=report.weight_bound,
            pruned=report.pruned_commutators,
            notes=report.notes,
            missing=report.missing_entries,
        )
