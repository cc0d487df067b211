/**
 * Workbench state and its pure transitions.
 *
 * The UI never computes model values: every displayed number comes from a
 * SimResponse, and each pinned result keeps the exact scenario that
 * produced it. At most one simulation request is in flight; completions
 * carrying a superseded token are discarded.
 */

import type { ScenarioDoc, SimResponse } from "./types.js";
import { applyTimelineEdit, EditError, type TimelineEdit } from "./windows.js";

export const MAX_PINNED = 4;

export interface PinnedResult {
  label: string;
  scenario: ScenarioDoc;
  response: SimResponse;
}

export interface WorkbenchState {
  scenario: ScenarioDoc;
  history: ScenarioDoc[];
  pinned: PinnedResult[];
  visibleSeries: Record<string, boolean>;
  inFlightToken: number | null;
  nextToken: number;
  error: string | null;
}

export const DEFAULT_VISIBLE: Record<string, boolean> = {
  daily_confirmed: true,
  cumulative_confirmed: false,
  visits_normalized: true,
  ewom_mass: false,
  people_flow: false,
};

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

export function createWorkbench(scenario: ScenarioDoc): WorkbenchState {
  return {
    scenario: clone(scenario),
    history: [],
    pinned: [],
    visibleSeries: { ...DEFAULT_VISIBLE },
    inFlightToken: null,
    nextToken: 1,
    error: null,
  };
}

/** Apply a timeline edit; on violation the scenario is untouched and the
 * message lands in `error` for inline display. Never triggers a run. */
export function applyEdit(state: WorkbenchState, edit: TimelineEdit): WorkbenchState {
  try {
    const schedules = applyTimelineEdit(state.scenario.schedules, edit);
    return {
      ...state,
      scenario: { ...clone(state.scenario), schedules },
      history: [...state.history, clone(state.scenario)],
      error: null,
    };
  } catch (err) {
    if (err instanceof EditError) {
      return { ...state, error: err.message };
    }
    throw err;
  }
}

/** Restore the exact scenario that preceded the last edit. */
export function undoEdit(state: WorkbenchState): WorkbenchState {
  if (state.history.length === 0) {
    return state;
  }
  const history = state.history.slice(0, -1);
  const scenario = state.history[state.history.length - 1];
  return { ...state, scenario: clone(scenario), history, error: null };
}

export function selectScenario(state: WorkbenchState, scenario: ScenarioDoc): WorkbenchState {
  return {
    ...state,
    scenario: clone(scenario),
    history: [...state.history, clone(state.scenario)],
    error: null,
  };
}

export function beginRun(state: WorkbenchState): { state: WorkbenchState; token: number } {
  const token = state.nextToken;
  return {
    state: { ...state, inFlightToken: token, nextToken: token + 1, error: null },
    token,
  };
}

/** Pin a completed run; stale completions (superseded token) are dropped. */
export function completeRun(
  state: WorkbenchState,
  token: number,
  response: SimResponse,
): WorkbenchState {
  if (state.inFlightToken !== token) {
    return state;
  }
  if (state.pinned.length >= MAX_PINNED) {
    return {
      ...state,
      inFlightToken: null,
      error: `at most ${MAX_PINNED} results can be pinned; unpin one first`,
    };
  }
  const pinned: PinnedResult = {
    label: response.scenario.name,
    scenario: clone(response.scenario),
    response,
  };
  return { ...state, inFlightToken: null, pinned: [...state.pinned, pinned] };
}

/** A failed run surfaces its message without touching any pins. */
export function failRun(state: WorkbenchState, token: number, message: string): WorkbenchState {
  if (state.inFlightToken !== token) {
    return state;
  }
  return { ...state, inFlightToken: null, error: message };
}

export function unpin(state: WorkbenchState, index: number): WorkbenchState {
  return { ...state, pinned: state.pinned.filter((_, i) => i !== index) };
}

export function toggleSeries(state: WorkbenchState, name: string): WorkbenchState {
  return {
    ...state,
    visibleSeries: { ...state.visibleSeries, [name]: !state.visibleSeries[name] },
  };
}
