/** Wire types mirroring the scenario API contract. */

/** [ISO date, 0|1] — the value takes effect on its date (inclusive). */
export type SchedulePair = [string, number];

export interface ScenarioDoc {
  name: string;
  start_date: string;
  schedules: Record<string, SchedulePair[]>;
  param_overrides: Record<string, number>;
}

export interface SimRequest {
  preset?: string;
  scenario?: ScenarioDoc;
  param_overrides?: Record<string, number>;
  horizon_days?: number;
  dt?: number;
}

export interface SimResponse {
  dates: string[];
  series: Record<string, number[]>;
  scenario: ScenarioDoc;
  engine_version: string;
}

export const SCHEDULE_NAMES = [
  "short_term_consciousness",
  "mid_term_consciousness",
  "long_term_consciousness",
  "school_closure_psych",
  "school_closure_commute",
  "stay_at_home",
  "focused_intervention",
  "new_normal",
] as const;

export type ScheduleName = (typeof SCHEDULE_NAMES)[number];
