import math
from typing import Dict, List

from django.template.loader import render_to_string

from bench.exceptions import EmptyReportException
from bench.response import ComparisonRow


PALETTE = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948"]


class ChartService:
    TEMPLATE_NAME = "bench/comparison_chart.svg"
    PLOT_HEIGHT = 320
    BAR_WIDTH = 22
    GROUP_GAP = 26
    MARGIN_LEFT = 84
    MARGIN_RIGHT = 150
    MARGIN_TOP = 48
    MARGIN_BOTTOM = 96
    TICK_COUNT = 5

    @staticmethod
    def _nice_step(maximum: int, ticks: int) -> int:
        if maximum <= 0:
            return 1
        raw = maximum / ticks
        magnitude = 10 ** math.floor(math.log10(raw))
        for factor in (1, 2, 5, 10):
            if factor * magnitude >= raw:
                return max(int(factor * magnitude), 1)
        return max(int(10 * magnitude), 1)

    def build_context(self, rows: List[ComparisonRow]) -> Dict:
        if not rows:
            raise EmptyReportException
        algos = list(dict.fromkeys(algo for row in rows for algo in row.costs))
        colors = {algo: PALETTE[i % len(PALETTE)] for i, algo in enumerate(algos)}

        maximum = max(cost for row in rows for cost in row.costs.values())
        step = self._nice_step(maximum, self.TICK_COUNT)
        top = step * max(math.ceil(maximum / step), 1)

        group_width = len(algos) * self.BAR_WIDTH + self.GROUP_GAP
        plot_width = len(rows) * group_width
        baseline = self.MARGIN_TOP + self.PLOT_HEIGHT

        def y_of(value: int) -> float:
            return baseline - self.PLOT_HEIGHT * value / top

        groups = []
        for index, row in enumerate(rows):
            left = self.MARGIN_LEFT + index * group_width + self.GROUP_GAP / 2
            bars = []
            for position, algo in enumerate(algos):
                if algo not in row.costs:
                    continue
                cost = row.costs[algo]
                bars.append(
                    {
                        "algo": algo,
                        "cost": cost,
                        "x": f"{left + position * self.BAR_WIDTH:.1f}",
                        "y": f"{y_of(cost):.1f}",
                        "width": self.BAR_WIDTH,
                        "height": f"{baseline - y_of(cost):.1f}",
                        "color": colors[algo],
                    }
                )
            groups.append(
                {
                    "label": row.file,
                    "bars": bars,
                    "label_x": f"{left + len(algos) * self.BAR_WIDTH / 2:.1f}",
                }
            )

        ticks = [
            {"label": value, "y": f"{y_of(value):.1f}"}
            for value in range(0, top + 1, step)
        ]
        width = self.MARGIN_LEFT + plot_width + self.MARGIN_RIGHT
        legend_x = self.MARGIN_LEFT + plot_width + 24
        return {
            "title": "Access cost comparison",
            "y_label": f"Access cost ({rows[0].cost_model.value} cost model)",
            "x_label": "Input",
            "width": width,
            "height": baseline + self.MARGIN_BOTTOM,
            "plot_left": self.MARGIN_LEFT,
            "tick_label_x": self.MARGIN_LEFT - 6,
            "plot_right": self.MARGIN_LEFT + plot_width,
            "plot_top": self.MARGIN_TOP,
            "baseline": baseline,
            "label_y": baseline + 16,
            "x_label_y": baseline + self.MARGIN_BOTTOM - 12,
            "y_label_y": self.MARGIN_TOP + self.PLOT_HEIGHT / 2,
            "title_x": f"{width / 2:.1f}",
            "groups": groups,
            "ticks": ticks,
            "legend": [
                {
                    "algo": algo.upper(),
                    "color": colors[algo],
                    "x": legend_x,
                    "y": self.MARGIN_TOP + 20 * i,
                    "text_x": legend_x + 18,
                    "text_y": self.MARGIN_TOP + 20 * i + 11,
                }
                for i, algo in enumerate(algos)
            ],
        }

    def render(self, rows: List[ComparisonRow]) -> str:
        return render_to_string(self.TEMPLATE_NAME, self.build_context(rows))


chart_service = ChartService()
