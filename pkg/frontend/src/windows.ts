/**
 * Binary schedules edited as on/off windows.
 *
 * Every scenario input is {0,1}-valued, so a schedule is fully described
 * by the date windows during which it is on. Edits operate on windows and
 * are converted back to breakpoint pairs, keeping the invariants: strictly
 * increasing dates, binary values, strict on/off alternation.
 */

import type { SchedulePair } from "./types.js";

/** A half-open activation window [on, off); off null = never reverts. */
export interface TimeWindow {
  on: string;
  off: string | null;
}

export type TimelineEdit =
  | { kind: "add-window"; schedule: string; on: string; off: string }
  | { kind: "remove-window"; schedule: string; on: string }
  | { kind: "move-breakpoint"; schedule: string; from: string; to: string };

export class EditError extends Error {}

const ISO_DATE = /^\d{4}-\d{2}-\d{2}$/;

export function assertIsoDate(value: string): void {
  if (!ISO_DATE.test(value) || Number.isNaN(Date.parse(value))) {
    throw new EditError(`not an ISO date: ${value}`);
  }
}

/** Days since the epoch; safe for date comparison and chart scaling. */
export function dayNumber(isoDate: string): number {
  return Math.round(Date.parse(`${isoDate}T00:00:00Z`) / 86_400_000);
}

export function validatePairs(pairs: SchedulePair[]): void {
  let lastDay = -Infinity;
  let active = false;
  for (const [date, value] of pairs) {
    assertIsoDate(date);
    if (value !== 0 && value !== 1) {
      throw new EditError(`schedule values must be 0 or 1, got ${value}`);
    }
    const day = dayNumber(date);
    if (day <= lastDay) {
      throw new EditError(`breakpoint dates must strictly increase at ${date}`);
    }
    lastDay = day;
    const turningOn = value === 1;
    if (turningOn === active) {
      throw new EditError(
        `redundant breakpoint at ${date}: schedule is already ${active ? "on" : "off"}`,
      );
    }
    active = turningOn;
  }
}

export function pairsToWindows(pairs: SchedulePair[]): TimeWindow[] {
  validatePairs(pairs);
  const windows: TimeWindow[] = [];
  let openedAt: string | null = null;
  for (const [date, value] of pairs) {
    if (value === 1) {
      openedAt = date;
    } else if (openedAt !== null) {
      windows.push({ on: openedAt, off: date });
      openedAt = null;
    }
  }
  if (openedAt !== null) {
    windows.push({ on: openedAt, off: null });
  }
  return windows;
}

export function windowsToPairs(windows: TimeWindow[]): SchedulePair[] {
  const pairs: SchedulePair[] = [];
  for (const w of windows) {
    pairs.push([w.on, 1]);
    if (w.off !== null) {
      pairs.push([w.off, 0]);
    }
  }
  pairs.sort((a, b) => dayNumber(a[0]) - dayNumber(b[0]));
  validatePairs(pairs);
  return pairs;
}

function overlaps(a: TimeWindow, b: TimeWindow): boolean {
  const aOff = a.off === null ? Infinity : dayNumber(a.off);
  const bOff = b.off === null ? Infinity : dayNumber(b.off);
  // touching counts as overlap: merging adjacent windows is ambiguous,
  // so the editor asks the user to remove and re-add instead
  return dayNumber(a.on) <= bOff && dayNumber(b.on) <= aOff;
}

export function addWindow(pairs: SchedulePair[], on: string, off: string): SchedulePair[] {
  assertIsoDate(on);
  assertIsoDate(off);
  if (dayNumber(off) <= dayNumber(on)) {
    throw new EditError(`window must end after it starts (${on} .. ${off})`);
  }
  const windows = pairsToWindows(pairs);
  const candidate: TimeWindow = { on, off };
  for (const existing of windows) {
    if (overlaps(candidate, existing)) {
      throw new EditError(
        `window ${on} .. ${off} overlaps the existing window ` +
          `${existing.on} .. ${existing.off ?? "(open)"}`,
      );
    }
  }
  return windowsToPairs([...windows, candidate]);
}

export function removeWindow(pairs: SchedulePair[], on: string): SchedulePair[] {
  const windows = pairsToWindows(pairs);
  const remaining = windows.filter((w) => w.on !== on);
  if (remaining.length === windows.length) {
    throw new EditError(`no window starts on ${on}`);
  }
  return windowsToPairs(remaining);
}

export function moveBreakpoint(
  pairs: SchedulePair[],
  from: string,
  to: string,
): SchedulePair[] {
  assertIsoDate(to);
  const index = pairs.findIndex(([date]) => date === from);
  if (index < 0) {
    throw new EditError(`no breakpoint on ${from}`);
  }
  const moved = pairs.map(
    (pair, i) => (i === index ? [to, pair[1]] : [...pair]) as SchedulePair,
  );
  moved.sort((a, b) => dayNumber(a[0]) - dayNumber(b[0]));
  validatePairs(moved); // rejects moves that break ordering or alternation
  return moved;
}

export function applyTimelineEdit(
  schedules: Record<string, SchedulePair[]>,
  edit: TimelineEdit,
): Record<string, SchedulePair[]> {
  const current = schedules[edit.schedule] ?? [];
  let next: SchedulePair[];
  switch (edit.kind) {
    case "add-window":
      next = addWindow(current, edit.on, edit.off);
      break;
    case "remove-window":
      next = removeWindow(current, edit.on);
      break;
    case "move-breakpoint":
      next = moveBreakpoint(current, edit.from, edit.to);
      break;
  }
  return { ...schedules, [edit.schedule]: next };
}
