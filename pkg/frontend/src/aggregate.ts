/**
 * Aggregation: sweep records -> per-series mean/min/max at each n, plus the
 * normalized reference curves (n^2, n log n, n log^2 n) drawn against them.
 */

import { SweepRecord } from './schema.js';

export type ValueField = 'total_queries' | 'total_charge';

export interface SeriesPoint {
  n: number;
  mean: number;
  min: number;
  max: number;
}

export interface Series {
  label: string; // family/learner/cost_model
  points: SeriesPoint[]; // ascending n
}

export const REFERENCE_NAMES = ['n2', 'nlogn', 'nlog2n'] as const;
export type ReferenceName = (typeof REFERENCE_NAMES)[number];

export const REFERENCE_SHAPES: Record<ReferenceName, (n: number) => number> = {
  n2: (n) => n * n,
  nlogn: (n) => n * Math.log(n),
  nlog2n: (n) => n * Math.log(n) ** 2,
};

function valueOf(record: SweepRecord, field: ValueField): number {
  return field === 'total_queries' ? record.totalQueries : record.totalCharge;
}

export function aggregate(records: SweepRecord[], field: ValueField): Series[] {
  const bySeries = new Map<string, Map<number, number[]>>();
  for (const record of records) {
    const label = `${record.family}/${record.learner}/${record.costModel}`;
    let byN = bySeries.get(label);
    if (!byN) {
      byN = new Map();
      bySeries.set(label, byN);
    }
    let values = byN.get(record.n);
    if (!values) {
      values = [];
      byN.set(record.n, values);
    }
    values.push(valueOf(record, field));
  }
  const out: Series[] = [];
  for (const [label, byN] of [...bySeries.entries()].sort()) {
    const points = [...byN.entries()]
      .sort((a, b) => a[0] - b[0])
      .map(([n, values]) => ({
        n,
        mean: values.reduce((s, v) => s + v, 0) / values.length,
        min: Math.min(...values),
        max: Math.max(...values),
      }));
    out.push({ label, points });
  }
  return out;
}

/**
 * A reference curve scaled to pass through the largest-n mean of the first
 * series, so shape comparisons are unit-free.
 */
export function referenceCurve(name: ReferenceName, series: Series): Series {
  const shape = REFERENCE_SHAPES[name];
  const anchor = series.points[series.points.length - 1];
  const scale = anchor.mean / shape(anchor.n);
  const points = series.points.map(({ n }) => {
    const v = scale * shape(n);
    return { n, mean: v, min: v, max: v };
  });
  return { label: `ref:${name}`, points };
}

/**
 * The companion data table written next to every figure: a deterministic
 * text rendering of exactly what was plotted.
 */
export function companionTable(series: Series[], refs: Series[], field: ValueField): string {
  const lines = [`# edgeprobe-plots data table (value=${field})`, 'series\tn\tmean\tmin\tmax'];
  for (const s of [...series, ...refs]) {
    for (const p of s.points) {
      lines.push(`${s.label}\t${p.n}\t${fmt(p.mean)}\t${fmt(p.min)}\t${fmt(p.max)}`);
    }
  }
  return lines.join('\n') + '\n';
}

function fmt(x: number): string {
  return Number.isInteger(x) ? x.toFixed(1) : x.toFixed(6);
}
