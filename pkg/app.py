import streamlit as st

from components.classifier import classifier_interface
from components.explainer import explainer_view
from components.scanner import scanner_interface
from utils.errors import ClassifierError
from utils.filters import F2Mode
from utils.pipeline import make_context
from utils.report_manager import ReportManager

# Page configuration
st.set_page_config(
    page_title="MNSD Type Classifier",
    page_icon="🧮",
    layout="wide",
    initial_sidebar_state="expanded"
)

# Initialize session state variables if they don't exist
if 'report_manager' not in st.session_state:
    st.session_state.report_manager = ReportManager(persist=True)
if 'contexts' not in st.session_state:
    # One memoizing context per f2 reading, shared by all panels
    st.session_state.contexts = {mode.value: make_context(mode) for mode in F2Mode}
if 'selected_report' not in st.session_state:
    st.session_state.selected_report = None
if 'scan_reports' not in st.session_state:
    st.session_state.scan_reports = []

st.title("Types of odd-dimensional modular categories")

# Sidebar for report management
with st.sidebar:
    st.header("Reports")

    upload_tab, export_tab = st.tabs(["Import", "Export"])

    with upload_tab:
        uploaded_file = st.file_uploader("Upload report JSON", type=['json'])
        if uploaded_file is not None:
            if st.button("Import Reports"):
                try:
                    count = st.session_state.report_manager.import_from_json(uploaded_file.getvalue().decode("utf-8"))
                    st.success(f"Imported {count} reports.")
                except ClassifierError as e:
                    st.error(f"Error importing reports: {str(e)}")

    with export_tab:
        manager = st.session_state.report_manager
        if manager.has_data():
            export_format = st.selectbox("Export format", options=["JSON", "CSV"], index=0)
            if export_format == "JSON":
                st.download_button(
                    label="Download JSON",
                    data=manager.to_json(),
                    file_name="mnsd_reports.json",
                    mime="application/json"
                )
            else:
                st.download_button(
                    label="Download CSV",
                    data=manager.export_to_csv(),
                    file_name="mnsd_reports.csv",
                    mime="text/csv"
                )
            if st.button("Save to store"):
                try:
                    saved = manager.save_to_database()
                    st.success(f"Saved {saved} reports.")
                except ClassifierError as e:
                    st.error(str(e))
        else:
            st.info("No reports yet.")

    st.divider()
    query = st.text_input("Find a type", placeholder="e.g. 3,16;7,6", key="search_box")
    if query:
        results = st.session_state.report_manager.search(query)
        if results:
            st.dataframe(results, use_container_width=True)
        else:
            st.warning("No stored report contains that type.")

classify_tab, explain_tab, scan_tab = st.tabs(["Classify", "Explain", "Scan"])

with classify_tab:
    classifier_interface()

with explain_tab:
    explainer_view()

with scan_tab:
    scanner_interface()

# Footer
st.markdown("---")
st.caption("Exhaustive type enumeration with explainable, citation-backed exclusions")
