// Pure mapping from server DTOs to what the page shows. Never computes
// game results locally: tokens, turn, status, and the winner all come
// from the last server response.

import type { Analysis, AutomatonDoc, GameState, Solution } from './api.js';

export interface ViewModel {
  letters: string[];
  stateCount: number;
  tokens: number[];
  tokenCount: number;
  buttonsEnabled: boolean;
  banner: string;
  bannerKind: 'idle' | 'ongoing' | 'won';
  badges: string[];
  historyText: string;
  turnText: string;
  engineBadge: string;
}

export function parseAutomatonText(text: string): AutomatonDoc | string {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (e) {
    return `not valid JSON: ${(e as Error).message}`;
  }
  const d = doc as Partial<AutomatonDoc>;
  if (
    typeof d !== 'object' ||
    d === null ||
    typeof d.states !== 'number' ||
    !Array.isArray(d.alphabet) ||
    typeof d.delta !== 'object'
  ) {
    return 'expected {"states", "alphabet", "delta"}';
  }
  return d as AutomatonDoc;
}

export function analysisBadges(analysis: Analysis, solution: Solution | null): string[] {
  const badges = [
    analysis.synchronizing ? 'synchronizing' : 'not synchronizing',
    analysis.in_ds ? 'monoid in DS' : 'monoid not in DS',
  ];
  if (solution) {
    badges.push(solution.winner === 'alice' ? 'Alice wins' : 'Bob wins');
  }
  if (analysis.reset_length !== null) {
    badges.push(`shortest reset: ${analysis.reset_length}`);
  }
  if (analysis.definite_degree !== null) {
    badges.push(`definite (${analysis.definite_degree})`);
  }
  if (analysis.commutative) badges.push('commutative');
  if (analysis.weakly_acyclic) badges.push('weakly acyclic');
  return badges;
}

export function buildViewModel(
  automaton: AutomatonDoc,
  analysis: Analysis | null,
  solution: Solution | null,
  game: GameState | null,
): ViewModel {
  const badges = analysis ? analysisBadges(analysis, solution) : [];
  if (game === null) {
    return {
      letters: automaton.alphabet,
      stateCount: automaton.states,
      tokens: [],
      tokenCount: 0,
      buttonsEnabled: false,
      banner: 'no game in progress',
      bannerKind: 'idle',
      badges,
      historyText: '',
      turnText: '',
      engineBadge: '',
    };
  }
  const humanTurn = game.status === 'ongoing' && game.turn === game.human_side;
  let banner: string;
  let bannerKind: ViewModel['bannerKind'];
  if (game.status === 'finished') {
    banner = 'Alice wins: one token remains';
    bannerKind = 'won';
  } else {
    banner = humanTurn ? 'your move' : 'waiting for the engine';
    bannerKind = 'ongoing';
  }
  return {
    letters: automaton.alphabet,
    stateCount: automaton.states,
    tokens: game.tokens,
    tokenCount: game.tokens.length,
    buttonsEnabled: humanTurn,
    banner,
    bannerKind,
    badges,
    historyText: game.history.join(' '),
    turnText: game.status === 'ongoing' ? `${game.turn} to move` : 'game over',
    engineBadge: `engine: ${game.engine_kind} as ${
      game.human_side === 'alice' ? 'bob' : 'alice'
    }`,
  };
}
