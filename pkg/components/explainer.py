import streamlit as st

from assets.status_icons import STATUS_ICONS
from utils.citations import get_citation
from utils.errors import ClassifierError
from utils.filters import sixth_power_chain
from utils.pipeline import explain
from utils.typevec import parse

def explainer_view():
    """
    Render the per-type explanation: every filter's verdict with its citation.
    """
    col1, col2 = st.columns([1, 2])
    with col1:
        dimension = st.number_input("FP dimension", min_value=1, value=1323, step=2, key="explain_dim")
    with col2:
        type_text = st.text_input("Type", value="(1,21;3,14;7,24)", key="explain_type")
    f2_mode = st.radio("f2 reading", options=["legacy", "strict"], horizontal=True, key="explain_f2")

    if not st.button("Explain", key="explain_button"):
        st.info("Enter a dimension and a type such as (1,3;3,16;7,6).")
        return

    try:
        t = parse(type_text)
        verdicts = explain(int(dimension), t, st.session_state.contexts[f2_mode])
    except ClassifierError as e:
        st.error(str(e))
        return

    st.subheader(f"{t} at dimension {int(dimension)}")
    for verdict in verdicts:
        citation = get_citation(verdict.citation)
        icon = STATUS_ICONS[verdict.status.value]
        st.markdown(
            f"{icon} **{verdict.filter_id}** ({verdict.status.value}): {verdict.reason}",
            unsafe_allow_html=True
        )
        if verdict.status.value == 'reject':
            st.caption(f"{citation.label}: \"{citation.quote}\"")

    chain = sixth_power_chain(t, int(dimension))
    if chain is not None:
        with st.expander("Sixth-power argument"):
            for step in chain.steps:
                st.markdown(f"- {step}")
            if not chain.closed:
                st.warning(f"Open step: {chain.open_step}")
