import streamlit as st

from utils.pipeline import scan
from utils.visualization import create_recursion_graph, create_scan_chart

def scanner_interface():
    """
    Render the range scan: summary table, overview chart and recursion graph.
    """
    col1, col2 = st.columns([2, 1])
    with col1:
        bound = st.slider("Scan odd dimensions below", min_value=3, max_value=2025, value=2025, step=2, key="scan_max")
    with col2:
        f2_mode = st.selectbox("f2 reading", options=["legacy", "strict"], key="scan_f2")

    if st.button("Run scan", key="scan_button"):
        with st.spinner("Classifying..."):
            reports = scan(int(bound), "full", st.session_state.contexts[f2_mode])
        st.session_state.report_manager.add_all(reports)
        st.session_state.scan_reports = reports

    reports = st.session_state.scan_reports
    if not reports:
        st.info("Run a scan to see every odd dimension at once.")
        return

    manager = st.session_state.report_manager
    flagged = [r.dimension for r in reports if r.non_pointed_survivors]
    if flagged:
        st.success(f"Non-pointed survivors at: {', '.join(str(d) for d in flagged)}")
    else:
        st.info("Only pointed types survive in this range.")

    st.plotly_chart(create_scan_chart(reports), use_container_width=True)

    tab1, tab2 = st.tabs(["Non-pointed survivors", "All dimensions"])
    with tab1:
        st.dataframe(manager.non_pointed_frame(reports), use_container_width=True)
    with tab2:
        st.dataframe(manager.summary_frame(reports), use_container_width=True)

    with st.expander("Recursion graph"):
        st.plotly_chart(
            create_recursion_graph([r.dimension for r in reports], highlight=flagged),
            use_container_width=True
        )
