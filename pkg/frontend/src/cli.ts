/**
 * Command line:
 *
 *   render --in <csv> [--in <csv> ...] --out <file.svg>
 *          [--ref n2,nlogn,nlog2n] [--log] [--value total_queries|total_charge]
 *
 * Writes the figure to <file.svg> and the companion data table to
 * <file.svg>.table.txt.  Exits nonzero on usage errors, schema mismatches,
 * or empty data.
 */

import { readFileSync, writeFileSync } from 'fs';
import {
  REFERENCE_NAMES,
  ReferenceName,
  ValueField,
  aggregate,
  companionTable,
  referenceCurve,
} from './aggregate.js';
import { renderSvg } from './render.js';
import { SchemaError, SweepRecord, parseCsv } from './schema.js';

interface Args {
  inputs: string[];
  out: string;
  refs: ReferenceName[];
  log: boolean;
  value: ValueField;
}

export function parseArgs(argv: string[]): Args {
  if (argv[0] !== 'render') {
    throw new Error(`unknown command: ${argv[0] ?? '(none)'}; expected "render"`);
  }
  const args: Args = { inputs: [], out: '', refs: [], log: false, value: 'total_queries' };
  for (let i = 1; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      if (i + 1 >= argv.length) throw new Error(`missing value for ${flag}`);
      return argv[++i];
    };
    switch (flag) {
      case '--in':
        args.inputs.push(next());
        break;
      case '--out':
        args.out = next();
        break;
      case '--ref':
        for (const name of next().split(',').filter((s) => s)) {
          if (!REFERENCE_NAMES.includes(name as ReferenceName)) {
            throw new Error(`unknown reference curve: ${name}`);
          }
          args.refs.push(name as ReferenceName);
        }
        break;
      case '--log':
        args.log = true;
        break;
      case '--value': {
        const v = next();
        if (v !== 'total_queries' && v !== 'total_charge') {
          throw new Error(`bad --value: ${v}`);
        }
        args.value = v;
        break;
      }
      default:
        throw new Error(`unknown flag: ${flag}`);
    }
  }
  if (args.inputs.length === 0 || !args.out) {
    throw new Error('render requires at least one --in and an --out');
  }
  return args;
}

export function run(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`usage error: ${(err as Error).message}`);
    return 2;
  }
  try {
    const records: SweepRecord[] = [];
    for (const path of args.inputs) {
      records.push(...parseCsv(readFileSync(path, 'utf8')));
    }
    const series = aggregate(records, args.value);
    const refs = args.refs.map((name) => referenceCurve(name, series[0]));
    const svg = renderSvg(series, refs, {
      logAxes: args.log,
      title: `query cost vs n (${args.value})`,
      valueLabel: args.value,
    });
    writeFileSync(args.out, svg);
    writeFileSync(`${args.out}.table.txt`, companionTable(series, refs, args.value));
    console.log(`wrote ${args.out} and ${args.out}.table.txt ` +
      `(${series.length} series, ${refs.length} reference curves)`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
    } else {
      console.error(`error: ${(err as Error).message}`);
    }
    return 1;
  }
}

const isMain = process.argv[1] && import.meta.url.endsWith(process.argv[1].split('/').pop()!);
if (isMain) {
  process.exit(run(process.argv.slice(2)));
}
