/**
 * SVG rendering: cost-vs-n curves with min/max whiskers, optional reference
 * curves, linear or log-log axes.  No drawing libraries; the figure is a
 * few hundred SVG elements built by hand.
 */

import { Series } from './aggregate.js';

const WIDTH = 760;
const HEIGHT = 500;
const MARGIN = { left: 78, right: 24, top: 40, bottom: 56 };

const SERIES_COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#8c564b'];
const REF_COLOR = '#888888';

interface Scale {
  (value: number): number;
}

function makeScale(min: number, max: number, outMin: number, outMax: number, log: boolean): Scale {
  const lo = log ? Math.log(min) : min;
  const hi = log ? Math.log(max) : max;
  const span = hi - lo || 1;
  return (value: number) => {
    const v = log ? Math.log(value) : value;
    return outMin + ((v - lo) / span) * (outMax - outMin);
  };
}

function ticks(min: number, max: number, log: boolean): number[] {
  if (log) {
    const out: number[] = [];
    for (let p = Math.floor(Math.log10(min)); p <= Math.ceil(Math.log10(max)); p++) {
      const v = 10 ** p;
      if (v >= min * 0.999 && v <= max * 1.001) out.push(v);
    }
    if (out.length < 2) return [min, max];
    return out;
  }
  const step = (max - min) / 5 || 1;
  return Array.from({ length: 6 }, (_, i) => min + i * step);
}

function fmtTick(v: number): string {
  if (v >= 1e6) return `${v / 1e6}M`;
  if (v >= 1e3 && Number.isInteger(v / 1e3)) return `${v / 1e3}k`;
  return v % 1 === 0 ? String(v) : v.toPrecision(3);
}

export interface RenderOptions {
  logAxes: boolean;
  title: string;
  valueLabel: string;
}

export function renderSvg(series: Series[], refs: Series[], opts: RenderOptions): string {
  const all = [...series, ...refs];
  const allPoints = all.flatMap((s) => s.points);
  if (allPoints.length === 0) throw new Error('nothing to plot');
  const nMin = Math.min(...allPoints.map((p) => p.n));
  const nMax = Math.max(...allPoints.map((p) => p.n));
  const vMin = Math.min(...allPoints.map((p) => p.min));
  const vMax = Math.max(...allPoints.map((p) => p.max));
  const log = opts.logAxes && nMin > 0 && vMin > 0;

  const x = makeScale(nMin, nMax, MARGIN.left, WIDTH - MARGIN.right, log);
  const y = makeScale(Math.max(vMin, log ? 1e-9 : -Infinity), vMax, HEIGHT - MARGIN.bottom, MARGIN.top, log);

  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`);
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(`<text x="${WIDTH / 2}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">${escapeXml(opts.title)}</text>`);

  // axes
  const x0 = MARGIN.left;
  const y0 = HEIGHT - MARGIN.bottom;
  parts.push(`<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${y0}" stroke="black"/>`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${WIDTH - MARGIN.right}" y2="${y0}" stroke="black"/>`);
  for (const t of ticks(nMin, nMax, log)) {
    const px = x(t);
    parts.push(`<line x1="${px.toFixed(1)}" y1="${y0}" x2="${px.toFixed(1)}" y2="${y0 + 5}" stroke="black"/>`);
    parts.push(`<text x="${px.toFixed(1)}" y="${y0 + 20}" text-anchor="middle" font-family="sans-serif" font-size="11">${fmtTick(t)}</text>`);
  }
  for (const t of ticks(Math.max(vMin, log ? 1 : vMin), vMax, log)) {
    const py = y(t);
    parts.push(`<line x1="${x0 - 5}" y1="${py.toFixed(1)}" x2="${x0}" y2="${py.toFixed(1)}" stroke="black"/>`);
    parts.push(`<text x="${x0 - 8}" y="${(py + 4).toFixed(1)}" text-anchor="end" font-family="sans-serif" font-size="11">${fmtTick(t)}</text>`);
  }
  parts.push(`<text x="${(WIDTH + MARGIN.left - MARGIN.right) / 2}" y="${HEIGHT - 14}" text-anchor="middle" font-family="sans-serif" font-size="12">n</text>`);
  parts.push(`<text x="20" y="${(HEIGHT + MARGIN.top - MARGIN.bottom) / 2}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 20 ${(HEIGHT + MARGIN.top - MARGIN.bottom) / 2})">${escapeXml(opts.valueLabel)}</text>`);

  // reference curves (dashed, behind the data)
  refs.forEach((ref, idx) => {
    const path = ref.points.map((p) => `${x(p.n).toFixed(1)},${y(p.mean).toFixed(1)}`).join(' ');
    parts.push(`<polyline points="${path}" fill="none" stroke="${REF_COLOR}" stroke-dasharray="${4 + 3 * idx},4"/>`);
  });

  // data series with whiskers
  series.forEach((s, idx) => {
    const color = SERIES_COLORS[idx % SERIES_COLORS.length];
    for (const p of s.points) {
      const px = x(p.n);
      parts.push(`<line x1="${px.toFixed(1)}" y1="${y(p.min).toFixed(1)}" x2="${px.toFixed(1)}" y2="${y(p.max).toFixed(1)}" stroke="${color}" stroke-width="1"/>`);
    }
    const path = s.points.map((p) => `${x(p.n).toFixed(1)},${y(p.mean).toFixed(1)}`).join(' ');
    parts.push(`<polyline points="${path}" fill="none" stroke="${color}" stroke-width="1.8"/>`);
    for (const p of s.points) {
      parts.push(`<circle cx="${x(p.n).toFixed(1)}" cy="${y(p.mean).toFixed(1)}" r="2.6" fill="${color}"/>`);
    }
  });

  // legend
  let ly = MARGIN.top + 6;
  for (const [idx, s] of series.entries()) {
    const color = SERIES_COLORS[idx % SERIES_COLORS.length];
    parts.push(`<line x1="${x0 + 12}" y1="${ly}" x2="${x0 + 40}" y2="${ly}" stroke="${color}" stroke-width="1.8"/>`);
    parts.push(`<text x="${x0 + 46}" y="${ly + 4}" font-family="sans-serif" font-size="11">${escapeXml(s.label)}</text>`);
    ly += 16;
  }
  for (const [idx, ref] of refs.entries()) {
    parts.push(`<line x1="${x0 + 12}" y1="${ly}" x2="${x0 + 40}" y2="${ly}" stroke="${REF_COLOR}" stroke-dasharray="${4 + 3 * idx},4"/>`);
    parts.push(`<text x="${x0 + 46}" y="${ly + 4}" font-family="sans-serif" font-size="11">${escapeXml(ref.label)}</text>`);
    ly += 16;
  }

  parts.push('</svg>');
  return parts.join('\n') + '\n';
}

function escapeXml(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}
