/** DOM wiring for the scenario workbench. */

import { WorkbenchApi, ApiError } from "./api.js";
import { renderChart, PIN_COLORS } from "./chart.js";
import {
  applyEdit,
  beginRun,
  completeRun,
  createWorkbench,
  failRun,
  selectScenario,
  toggleSeries,
  undoEdit,
  unpin,
  MAX_PINNED,
  type WorkbenchState,
} from "./state.js";
import type { ScenarioDoc } from "./types.js";
import { pairsToWindows, type TimelineEdit, type TimeWindow } from "./windows.js";

const EDITABLE_SCHEDULES = [
  "stay_at_home",
  "short_term_consciousness",
  "mid_term_consciousness",
  "long_term_consciousness",
  "school_closure_psych",
  "school_closure_commute",
  "focused_intervention",
  "new_normal",
];
const SERIES_TOGGLES = [
  "daily_confirmed",
  "cumulative_confirmed",
  "visits_normalized",
  "ewom_mass",
  "people_flow",
];

const api = new WorkbenchApi("");
let state: WorkbenchState | null = null;
let presets: ScenarioDoc[] = [];

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function setState(next: WorkbenchState): void {
  state = next;
  render();
}

function render(): void {
  if (!state) return;
  const banner = $("error-banner");
  banner.textContent = state.error ?? "";
  banner.style.display = state.error ? "block" : "none";

  $("scenario-name").textContent = state.scenario.name;
  renderScheduleEditor();
  renderPins();
  renderCharts();
  const runButton = $<HTMLButtonElement>("run-button");
  runButton.disabled = state.inFlightToken !== null;
  runButton.textContent = state.inFlightToken !== null ? "running..." : "run + pin";
  $<HTMLButtonElement>("undo-button").disabled = state.history.length === 0;
}

function renderScheduleEditor(): void {
  if (!state) return;
  const container = $("schedules");
  container.innerHTML = "";
  for (const name of EDITABLE_SCHEDULES) {
    const row = document.createElement("div");
    row.className = "schedule-row";
    const title = document.createElement("strong");
    title.textContent = name;
    row.appendChild(title);

    const pairs = state.scenario.schedules[name] ?? [];
    let windows: TimeWindow[];
    try {
      windows = pairsToWindows(pairs);
    } catch {
      windows = [];
    }
    for (const w of windows) {
      const chip = document.createElement("span");
      chip.className = "window-chip";
      chip.textContent = `${w.on} .. ${w.off ?? "open"}`;
      const remove = document.createElement("button");
      remove.textContent = "x";
      remove.title = "remove window";
      remove.onclick = () =>
        setState(applyEdit(state!, { kind: "remove-window", schedule: name, on: w.on }));
      chip.appendChild(remove);
      row.appendChild(chip);
    }

    const addButton = document.createElement("button");
    addButton.textContent = "+ window";
    addButton.onclick = () => {
      const on = prompt(`${name}: window start (YYYY-MM-DD)`);
      if (!on) return;
      const off = prompt(`${name}: window end (YYYY-MM-DD)`);
      if (!off) return;
      const edit: TimelineEdit = { kind: "add-window", schedule: name, on, off };
      setState(applyEdit(state!, edit));
    };
    row.appendChild(addButton);
    container.appendChild(row);
  }
}

function renderPins(): void {
  if (!state) return;
  const list = $("pinned-list");
  list.innerHTML = "";
  state.pinned.forEach((pin, index) => {
    const item = document.createElement("li");
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = PIN_COLORS[index % PIN_COLORS.length];
    item.appendChild(swatch);
    item.appendChild(document.createTextNode(` ${pin.label} `));
    const drop = document.createElement("button");
    drop.textContent = "unpin";
    drop.onclick = () => setState(unpin(state!, index));
    item.appendChild(drop);
    list.appendChild(item);
  });
  $("pin-count").textContent = `${state.pinned.length}/${MAX_PINNED}`;
}

function renderCharts(): void {
  if (!state) return;
  const charts = $("charts");
  charts.innerHTML = "";
  for (const name of SERIES_TOGGLES) {
    if (!state.visibleSeries[name]) continue;
    const holder = document.createElement("div");
    holder.innerHTML = renderChart(state.pinned, name);
    charts.appendChild(holder);
  }
}

function renderSeriesToggles(): void {
  const container = $("series-toggles");
  container.innerHTML = "";
  for (const name of SERIES_TOGGLES) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = state?.visibleSeries[name] ?? false;
    box.onchange = () => setState(toggleSeries(state!, name));
    label.appendChild(box);
    label.appendChild(document.createTextNode(name));
    container.appendChild(label);
  }
}

async function runAndPin(): Promise<void> {
  if (!state || state.inFlightToken !== null) return;
  const { state: started, token } = beginRun(state);
  setState(started);
  try {
    const response = await api.simulate({ scenario: state.scenario });
    setState(completeRun(state, token, response));
  } catch (err) {
    const message = err instanceof ApiError ? err.message : String(err);
    setState(failRun(state, token, message));
  }
}

async function boot(): Promise<void> {
  const presetSelect = $<HTMLSelectElement>("preset-select");
  try {
    presets = await api.presets();
  } catch (err) {
    const banner = $("error-banner");
    banner.textContent = `cannot load presets: ${err instanceof Error ? err.message : err}`;
    banner.style.display = "block";
    return;
  }
  presetSelect.innerHTML = "";
  for (const doc of presets) {
    const option = document.createElement("option");
    option.value = doc.name;
    option.textContent = doc.name;
    presetSelect.appendChild(option);
  }
  presetSelect.onchange = () => {
    const chosen = presets.find((p) => p.name === presetSelect.value);
    if (chosen && state) setState(selectScenario(state, chosen));
  };

  state = createWorkbench(presets[0]);
  renderSeriesToggles();
  $<HTMLButtonElement>("run-button").onclick = () => void runAndPin();
  $<HTMLButtonElement>("undo-button").onclick = () => setState(undoEdit(state!));
  render();
}

void boot();
