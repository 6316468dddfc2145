// Page wiring: paste an automaton, inspect the analysis, pick a side,
// play letter by letter. Every displayed value is re-derived from the
// most recent server response.

import { ApiError, Client } from './api.js';
import type { Analysis, AutomatonDoc, GameState, Solution } from './api.js';
import { renderAutomatonSvg } from './render.js';
import { buildViewModel, parseAutomatonText } from './viewmodel.js';

const client = new Client(
  new URLSearchParams(location.search).get('api') ?? 'http://127.0.0.1:8000',
);

interface AppState {
  automatonId: string | null;
  automaton: AutomatonDoc | null;
  analysis: Analysis | null;
  solution: Solution | null;
  game: GameState | null;
  error: string | null;
}

const state: AppState = {
  automatonId: null,
  automaton: null,
  analysis: null,
  solution: null,
  game: null,
  error: null,
};

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function render(): void {
  const errorBox = el<HTMLDivElement>('error');
  errorBox.textContent = state.error ?? '';
  errorBox.style.display = state.error ? 'block' : 'none';
  const graph = el<HTMLDivElement>('graph');
  const badges = el<HTMLDivElement>('badges');
  const buttons = el<HTMLDivElement>('letters');
  const banner = el<HTMLDivElement>('banner');
  const history = el<HTMLDivElement>('history');
  const meta = el<HTMLDivElement>('meta');
  if (!state.automaton) {
    graph.innerHTML = '';
    badges.textContent = '';
    buttons.innerHTML = '';
    banner.textContent = 'paste an automaton to begin';
    banner.className = 'banner idle';
    history.textContent = '';
    meta.textContent = '';
    return;
  }
  const vm = buildViewModel(state.automaton, state.analysis, state.solution, state.game);
  graph.innerHTML = renderAutomatonSvg(state.automaton, vm.tokens);
  badges.innerHTML = vm.badges.map((b) => `<span class="badge">${b}</span>`).join(' ');
  banner.textContent = vm.banner;
  banner.className = `banner ${vm.bannerKind}`;
  history.textContent = vm.historyText ? `moves: ${vm.historyText}` : '';
  meta.textContent = [vm.turnText, vm.engineBadge].filter(Boolean).join(' · ');
  buttons.innerHTML = '';
  for (const letter of vm.letters) {
    const button = document.createElement('button');
    button.textContent = letter;
    button.disabled = !vm.buttonsEnabled;
    button.addEventListener('click', () => {
      void playLetter(letter);
    });
    buttons.appendChild(button);
  }
}

async function loadAutomaton(): Promise<void> {
  state.error = null;
  const text = el<HTMLTextAreaElement>('automaton-input').value;
  const parsed = parseAutomatonText(text);
  if (typeof parsed === 'string') {
    state.error = parsed;
    render();
    return;
  }
  try {
    const { id } = await client.createAutomaton(parsed);
    state.automatonId = id;
    state.automaton = parsed;
    state.game = null;
    state.analysis = await client.analysis(id);
    state.solution = state.analysis.n <= 24 ? await client.solution(id) : null;
  } catch (e) {
    state.error = e instanceof ApiError ? e.message : String(e);
  }
  render();
}

async function startGame(): Promise<void> {
  if (!state.automatonId) return;
  state.error = null;
  const side = el<HTMLSelectElement>('side').value as 'alice' | 'bob';
  const engine = el<HTMLSelectElement>('engine').value;
  try {
    const created = await client.createGame({
      automaton_id: state.automatonId,
      human_side: side,
      engine_kind: engine === 'auto' ? null : engine,
    });
    state.game = created.position;
  } catch (e) {
    state.error = e instanceof ApiError ? e.message : String(e);
  }
  render();
}

async function playLetter(letter: string): Promise<void> {
  if (!state.game) return;
  state.error = null;
  try {
    state.game = await client.move(state.game.game_id, letter);
  } catch (e) {
    state.error = e instanceof ApiError ? e.message : String(e);
  }
  render();
}

export function init(): void {
  el<HTMLButtonElement>('load').addEventListener('click', () => void loadAutomaton());
  el<HTMLButtonElement>('start').addEventListener('click', () => void startGame());
  render();
}

if (typeof document !== 'undefined' && document.getElementById('load')) {
  init();
}
