/**
 * SVG chart rendering: overlaid series lines for the pinned results with
 * intervention windows drawn as bars above the plot, one annotation lane
 * per pinned result (thick bars: stay-at-home; thin dashed bars:
 * short-term consciousness). All pinned results share one date domain.
 */

import type { PinnedResult } from "./state.js";
import { dayNumber, pairsToWindows } from "./windows.js";

export const PIN_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

export interface ChartLayout {
  width: number;
  height: number;
  margin: number;
  laneHeight: number;
}

const DEFAULT_LAYOUT: ChartLayout = { width: 920, height: 420, margin: 48, laneHeight: 12 };

interface Domain {
  startDay: number;
  endDay: number;
}

/** One x-axis domain covering every pinned result. */
export function sharedDateDomain(pinned: PinnedResult[]): Domain {
  const starts = pinned.map((p) => dayNumber(p.response.dates[0]));
  const ends = pinned.map((p) => dayNumber(p.response.dates[p.response.dates.length - 1]));
  return { startDay: Math.min(...starts), endDay: Math.max(...ends) };
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderChart(
  pinned: PinnedResult[],
  seriesName: string,
  layout: ChartLayout = DEFAULT_LAYOUT,
): string {
  const { width, height, margin, laneHeight } = layout;
  if (pinned.length === 0) {
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}">` +
      `<text x="${width / 2}" y="${height / 2}" text-anchor="middle" fill="#777">` +
      `pin a simulation run to see ${esc(seriesName)}</text></svg>`
    );
  }

  const domain = sharedDateDomain(pinned);
  const span = Math.max(domain.endDay - domain.startDay, 1);
  const lanesTop = margin;
  const lanesHeight = pinned.length * laneHeight;
  const plotTop = lanesTop + lanesHeight + 8;
  const plotBottom = height - margin;
  const plotHeight = plotBottom - plotTop;
  const x = (day: number) => margin + ((day - domain.startDay) / span) * (width - 2 * margin);

  let peak = 0;
  for (const pin of pinned) {
    for (const value of pin.response.series[seriesName] ?? []) {
      if (value > peak) peak = value;
    }
  }
  if (peak === 0) peak = 1;
  const y = (value: number) => plotBottom - (value / peak) * plotHeight;

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    `<line x1="${margin}" y1="${plotBottom}" x2="${width - margin}" y2="${plotBottom}" stroke="#333"/>`,
    `<line x1="${margin}" y1="${plotTop}" x2="${margin}" y2="${plotBottom}" stroke="#333"/>`,
  ];

  // intervention lanes above the plot
  pinned.forEach((pin, index) => {
    const colour = PIN_COLORS[index % PIN_COLORS.length];
    const laneY = lanesTop + index * laneHeight;
    const schedules = pin.scenario.schedules;
    for (const w of pairsToWindows(schedules["stay_at_home"] ?? [])) {
      const onX = x(dayNumber(w.on));
      const offX = x(w.off === null ? domain.endDay : dayNumber(w.off));
      parts.push(
        `<rect class="bar bar-stay" data-pin="${index}" data-on="${w.on}" ` +
          `data-off="${w.off ?? ""}" x="${onX.toFixed(1)}" y="${laneY}" ` +
          `width="${(offX - onX).toFixed(1)}" height="${laneHeight - 4}" ` +
          `fill="${colour}" fill-opacity="0.85"/>`,
      );
    }
    for (const w of pairsToWindows(schedules["short_term_consciousness"] ?? [])) {
      const onX = x(dayNumber(w.on));
      const offX = x(w.off === null ? domain.endDay : dayNumber(w.off));
      parts.push(
        `<rect class="bar bar-consciousness" data-pin="${index}" data-on="${w.on}" ` +
          `data-off="${w.off ?? ""}" x="${onX.toFixed(1)}" y="${laneY + laneHeight - 4}" ` +
          `width="${(offX - onX).toFixed(1)}" height="2" fill="none" ` +
          `stroke="${colour}" stroke-dasharray="3,2"/>`,
      );
    }
  });

  // series lines
  pinned.forEach((pin, index) => {
    const values = pin.response.series[seriesName];
    if (!values) return;
    const colour = PIN_COLORS[index % PIN_COLORS.length];
    const startDay = dayNumber(pin.response.dates[0]);
    const points = values
      .map((value, day) => `${x(startDay + day).toFixed(1)},${y(value).toFixed(1)}`)
      .join(" ");
    parts.push(
      `<polyline class="series-line" data-pin="${index}" fill="none" ` +
        `stroke="${colour}" stroke-width="1.6" points="${points}"/>`,
    );
    parts.push(
      `<text x="${width - margin - 4}" y="${lanesTop + index * laneHeight + laneHeight - 5}" ` +
        `text-anchor="end" font-size="11" fill="${colour}">${esc(pin.label)}</text>`,
    );
  });

  parts.push(
    `<text x="${margin}" y="${height - 12}" font-size="11" fill="#555">` +
      `${esc(seriesName)} - peak ${peak.toPrecision(4)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n");
}
