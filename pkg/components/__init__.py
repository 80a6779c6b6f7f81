# Streamlit panels for the explorer
