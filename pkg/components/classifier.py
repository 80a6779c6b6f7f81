import streamlit as st
from typing import Dict, List

from utils.errors import ClassifierError
from utils.pipeline import classify, compare_reference, realized_survivors
from utils.reference import REFERENCE_DIMENSIONS
from utils.visualization import create_attribution_chart

def classifier_interface():
    """
    Render the single-dimension classification panel.
    """
    col1, col2, col3 = st.columns([2, 1, 1])
    with col1:
        dimension = st.number_input("FP dimension", min_value=1, value=441, step=2, key="classify_dim")
    with col2:
        mode = st.selectbox("Filter set", options=["full", "basic"], key="classify_mode")
    with col3:
        f2_mode = st.selectbox("f2 reading", options=["legacy", "strict"], key="classify_f2")

    if st.button("Classify", key="classify_button"):
        try:
            ctx = st.session_state.contexts[f2_mode]
            report = classify(int(dimension), mode, ctx)
            st.session_state.report_manager.add(report)
            st.session_state.selected_report = (report.dimension, mode, f2_mode)
        except ClassifierError as e:
            st.error(f"Cannot classify {int(dimension)}: {str(e)}")
            return

    if st.session_state.selected_report:
        report = st.session_state.report_manager.get_report(*st.session_state.selected_report)
        if report is not None:
            _display_report(report)

def _display_report(report):
    """
    Display survivors, rejections and the reference comparison of a report.

    Args:
        report: ClassificationReport to show
    """
    st.subheader(f"Dimension {report.dimension} = {report.factorization}")

    col1, col2, col3 = st.columns(3)
    col1.metric("Raw candidates", "-" if report.raw_count is None else report.raw_count)
    col2.metric("Survivors", len(report.survivors))
    col3.metric("Unresolved", len(report.unresolved))

    witnesses = {t: w for t, w in realized_survivors(report)}
    st.markdown("**Survivors**")
    st.dataframe(
        [{'type': str(t), 'rank': t.rank(), 'realization': witnesses.get(t, '')} for t in report.survivors],
        use_container_width=True
    )

    if report.unresolved:
        st.warning("Some candidates could not be decided:")
        for t, verdicts in report.unresolved:
            st.markdown(f"- `{t}`: {verdicts[0].reason}")

    if report.rejections:
        with st.expander(f"Rejected candidates ({len(report.rejections)})"):
            _display_rejections(report.rejections)
        st.plotly_chart(create_attribution_chart(report), use_container_width=True)

    if report.dimension in REFERENCE_DIMENSIONS:
        discrepancy = compare_reference(report)
        if discrepancy.is_clean:
            st.success(f"Matches the {discrepancy.stage.value} reference list.")
        else:
            st.error("Differs from the reference list.")
            st.json(discrepancy.to_dict())

def _display_rejections(rejections: List):
    rows: List[Dict] = []
    for t, verdicts in rejections:
        first = verdicts[0]
        rows.append({'type': str(t), 'filter': first.filter_id, 'reason': first.reason})
    st.dataframe(rows, use_container_width=True)
