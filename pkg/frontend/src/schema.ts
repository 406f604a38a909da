/**
 * The sweep CSV schema (version 1), consumed bit-exactly:
 *
 *   schema_version,family,learner,cost_model,n,trial,seed,total_queries,total_charge,wall_micros,correct
 *
 * Anything else -- different header, unknown version, short rows, non-numeric
 * fields -- is a SchemaError.
 */

export const SCHEMA_VERSION = 1;
export const CSV_HEADER =
  'schema_version,family,learner,cost_model,n,trial,seed,total_queries,total_charge,wall_micros,correct';

export interface SweepRecord {
  family: string;
  learner: string;
  costModel: string;
  n: number;
  trial: number;
  seed: number;
  totalQueries: number;
  totalCharge: number;
  wallMicros: number;
  correct: number;
}

export class SchemaError extends Error {}

function toInt(field: string, value: string): number {
  if (!/^-?\d+$/.test(value)) {
    throw new SchemaError(`non-integer ${field}: ${JSON.stringify(value)}`);
  }
  return Number(value);
}

export function parseCsv(text: string): SweepRecord[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0 || lines[0] !== CSV_HEADER) {
    throw new SchemaError(`unexpected CSV header: ${JSON.stringify(lines[0] ?? '')}`);
  }
  const records: SweepRecord[] = [];
  for (const line of lines.slice(1)) {
    const cols = line.split(',');
    if (cols.length !== 11) {
      throw new SchemaError(`expected 11 columns, got ${cols.length}: ${line}`);
    }
    if (toInt('schema_version', cols[0]) !== SCHEMA_VERSION) {
      throw new SchemaError(`unsupported schema version: ${cols[0]}`);
    }
    records.push({
      family: cols[1],
      learner: cols[2],
      costModel: cols[3],
      n: toInt('n', cols[4]),
      trial: toInt('trial', cols[5]),
      seed: toInt('seed', cols[6]),
      totalQueries: toInt('total_queries', cols[7]),
      totalCharge: toInt('total_charge', cols[8]),
      wallMicros: toInt('wall_micros', cols[9]),
      correct: toInt('correct', cols[10]),
    });
  }
  if (records.length === 0) {
    throw new SchemaError('CSV contains a header but no data rows');
  }
  return records;
}
