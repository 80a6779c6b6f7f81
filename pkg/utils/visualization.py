import networkx as nx
import plotly.graph_objects as go
from typing import List, Optional, Sequence

from utils.pipeline import ClassificationReport, dependency_graph

STATUS_COLORS = {
    'pass': '#43A047',          # green
    'reject': '#E53935',        # red
    'inapplicable': '#78909C',  # blue grey
    'inconclusive': '#FB8C00',  # orange
}


def create_scan_chart(reports: Sequence[ClassificationReport]):
    """
    Raw candidate and survivor counts per dimension.

    Args:
        reports: Scan reports in ascending dimension order

    Returns:
        Plotly figure object
    """
    if not reports:
        return go.Figure()

    dims = [r.dimension for r in reports]
    fig = go.Figure()
    fig.add_trace(go.Bar(
        x=dims, y=[r.raw_count for r in reports],
        name='raw candidates', marker_color='#90A4AE'
    ))
    fig.add_trace(go.Bar(
        x=dims, y=[len(r.survivors) for r in reports],
        name='survivors', marker_color='#1E88E5'
    ))

    # Mark dimensions with non-pointed survivors
    flagged = [r for r in reports if r.non_pointed_survivors]
    if flagged:
        fig.add_trace(go.Scatter(
            x=[r.dimension for r in flagged],
            y=[r.raw_count for r in flagged],
            mode='markers+text',
            marker=dict(color='#D81B60', size=10, symbol='star'),
            text=[str(r.dimension) for r in flagged],
            textposition="top center",
            hovertext=[", ".join(str(t) for t in r.non_pointed_survivors) for r in flagged],
            hoverinfo='text',
            name='non-pointed survivors'
        ))

    fig.update_layout(
        title="Candidates per odd dimension",
        barmode='overlay',
        xaxis_title="FP dimension",
        yaxis_title="types",
        hovermode='closest',
        margin=dict(b=20, l=5, r=5, t=40),
    )
    return fig


def create_attribution_chart(report: ClassificationReport):
    """Bar chart of rejections per first rejecting filter."""
    counts = {}
    for _, verdicts in report.rejections:
        counts[verdicts[0].filter_id] = counts.get(verdicts[0].filter_id, 0) + 1
    if not counts:
        fig = go.Figure()
        fig.add_annotation(
            text="No rejected candidates",
            xref="paper", yref="paper",
            x=0.5, y=0.5, showarrow=False
        )
        return fig

    names = sorted(counts)
    fig = go.Figure(go.Bar(x=names, y=[counts[n] for n in names], marker_color=STATUS_COLORS['reject']))
    fig.update_layout(
        title=f"Rejections at dimension {report.dimension}",
        xaxis_title="filter",
        yaxis_title="candidates",
        margin=dict(b=20, l=5, r=5, t=40),
    )
    return fig


def create_recursion_graph(dimensions: Sequence[int], highlight: Optional[List[int]] = None):
    """
    Draw the recursion dependencies N/r -> N between dimensions.

    Args:
        dimensions: Dimensions to include
        highlight: Dimensions drawn larger (e.g. those with non-pointed survivors)

    Returns:
        Plotly figure object
    """
    graph = dependency_graph(list(dimensions))
    # Only dimensions that take part in some recursion
    graph = graph.subgraph([n for n in graph.nodes() if graph.degree(n) > 0]).copy()
    if graph.number_of_nodes() == 0:
        return go.Figure()

    pos = nx.spring_layout(graph, seed=42)
    highlight = set(highlight or [])

    edge_x = []
    edge_y = []
    for source, target in graph.edges():
        x0, y0 = pos[source]
        x1, y1 = pos[target]
        edge_x.extend([x0, x1, None])
        edge_y.extend([y0, y1, None])

    fig = go.Figure()
    fig.add_trace(go.Scatter(
        x=edge_x, y=edge_y,
        line=dict(width=1, color='#888'),
        hoverinfo='none',
        mode='lines'
    ))

    nodes = sorted(graph.nodes())
    fig.add_trace(go.Scatter(
        x=[pos[n][0] for n in nodes],
        y=[pos[n][1] for n in nodes],
        mode='markers+text',
        marker=dict(
            color=['#D81B60' if n in highlight else '#1E88E5' for n in nodes],
            size=[16 if n in highlight else 8 for n in nodes],
            line=dict(width=1, color='#333')
        ),
        text=[str(n) for n in nodes],
        textposition="top center",
        hoverinfo='text',
        hovertext=[f"{n}: depends on {sorted(graph.predecessors(n))}" for n in nodes],
        textfont=dict(size=9)
    ))

    fig.update_layout(
        title="Modular-factor recursion between dimensions",
        showlegend=False,
        hovermode='closest',
        margin=dict(b=20, l=5, r=5, t=40),
        xaxis=dict(showgrid=False, zeroline=False, showticklabels=False),
        yaxis=dict(showgrid=False, zeroline=False, showticklabels=False),
    )
    return fig
