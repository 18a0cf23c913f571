"""Module: report templates"""

from jinja2 import Template

VERDICT = Template(
    """{{ title }}
PP over {{ domain }}: {{ "true" if report.is_pp else "false" }}{% if report.closure is not none %}
  closure: {{ "true" if report.closure else "false" }}{% endif %}{% if report.injective is not none %}
  injective: {{ "true" if report.injective else "false" }}{% endif %}{% if report.witness %}
  witness: f({{ report.witness[0] }}) = f({{ report.witness[1] }}){% endif %}{% if report.escapee is not none %}
  escapee: f({{ report.escapee }}) leaves the domain{% endif %}
  evaluations: {{ report.evals }} in {{ "%.1f"|format(report.ms) }} ms
"""
)

SUB_VERDICTS = Template(
    """{{ title }}
{% for row in rows %}  {{ "%-28s"|format(row.label) }} {{ "true " if row.is_pp else "false" }}  ({{ row.evals }} evaluations)
{% endfor %}{{ passed }}/{{ rows|length }} passed
"""
)

LEMMA_TABLE = Template(
    """Lemma suite {{ report.suite }} ({% for key, value in report.parameter.items() %}{{ key }}={{ value }}{% endfor %}) over F_{{ report.field.p }}^{{ report.field.m }}
{% for line in report.lines %}  [{{ "PASS" if line.passed else "FAIL" }}] {{ line.name }}{% if line.detail %}: {{ line.detail }}{% endif %}
{% endfor %}{{ "all lines passed" if report.passed else "some lines failed" }}
"""
)

SEARCH_TABLE = Template(
    """{{ "%-6s %-4s %-8s %-8s %-16s"|format("q", "n", "k", "gamma", "family") }}
{% for record in records %}{{ "%-6d %-4d %-8d %-8d %-16s"|format(record.q, record.n, record.k, record.gamma, record.family_tag or "novel") }}
{% endfor %}{{ records|length }} permutation(s){% if novel %}, {{ novel }} not explained by a known family{% endif %}
"""
)

NIHO_TABLE = Template(
    """Niho trinomials x + l1 x^(s(q-1)+1) + l2 x^(t(q-1)+1) over F_{{ order }}
{{ "%-4s %-4s %-4s %-4s %-8s"|format("s", "t", "l1", "l2", "tag") }}
{% for record in records %}{{ "%-4d %-4d %-4d %-4d %-8s"|format(record.s, record.t, record.lambda1, record.lambda2, record.family_tag or "") }}
{% endfor %}{{ records|length }} permutation trinomial(s)
"""
)

MU_DECOMPOSITION = Template(
    """mu_{{ q + 1 }} inside F_{{ order }} (q = {{ q }})
  mu:          {{ mu|join(" ") }}
  omega-plus:  {{ plus|join(" ") }}
  omega-minus: {{ minus|join(" ") }}
  sizes: {{ plus|length }} / {{ minus|length }}, disjoint: {{ "true" if partition.disjoint else "false" }}, covers mu: {{ "true" if partition.covers else "false" }}
"""
)

RECORDS_CHECK = Template(
    """Re-verified {{ total }} record(s) from {{ path }}: {{ total - failed }} permutation(s), {{ failed }} failure(s)
{% for record in failures %}  not a permutation: q={{ record.q }} n={{ record.n }} k={{ record.k }} gamma={{ record.gamma }}
{% endfor %}"""
)
