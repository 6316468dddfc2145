// SVG rendering of the automaton graph: states on a circle, merged edge
// labels, self-loops as small arcs, token-holding states filled gray to
// match the usual diagrams. Pure string generation so it is testable
// without a DOM.

import type { AutomatonDoc } from './api.js';

const SIZE = 420;
const RADIUS = 150;
const NODE_R = 22;

export interface NodePos {
  id: number;
  x: number;
  y: number;
}

export function circularLayout(n: number): NodePos[] {
  const cx = SIZE / 2;
  const cy = SIZE / 2;
  const out: NodePos[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    out.push({
      id: i,
      x: n === 1 ? cx : cx + RADIUS * Math.cos(angle),
      y: n === 1 ? cy : cy + RADIUS * Math.sin(angle),
    });
  }
  return out;
}

interface EdgeGroup {
  from: number;
  to: number;
  labels: string[];
}

export function groupEdges(doc: AutomatonDoc): EdgeGroup[] {
  const groups = new Map<string, EdgeGroup>();
  for (const letter of doc.alphabet) {
    const row = doc.delta[letter];
    row.forEach((target, source) => {
      const key = `${source}->${target}`;
      let group = groups.get(key);
      if (!group) {
        group = { from: source, to: target, labels: [] };
        groups.set(key, group);
      }
      group.labels.push(letter);
    });
  }
  return [...groups.values()];
}

function escapeXml(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function edgePath(a: NodePos, b: NodePos, bend: number): { d: string; lx: number; ly: number } {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  // perpendicular offset so opposite edges do not overlap
  const px = -uy;
  const py = ux;
  const mx = (a.x + b.x) / 2 + px * bend;
  const my = (a.y + b.y) / 2 + py * bend;
  const sx = a.x + ux * NODE_R;
  const sy = a.y + uy * NODE_R;
  const tx = b.x - ux * (NODE_R + 6);
  const ty = b.y - uy * (NODE_R + 6);
  return {
    d: `M ${sx.toFixed(1)} ${sy.toFixed(1)} Q ${mx.toFixed(1)} ${my.toFixed(1)} ${tx.toFixed(1)} ${ty.toFixed(1)}`,
    lx: mx,
    ly: my,
  };
}

function loopPath(node: NodePos): { d: string; lx: number; ly: number } {
  const cx = SIZE / 2;
  const cy = SIZE / 2;
  const ox = node.x - cx;
  const oy = node.y - cy;
  const len = Math.hypot(ox, oy) || 1;
  const ux = ox / len;
  const uy = oy / len;
  const sx = node.x + ux * NODE_R - uy * 8;
  const sy = node.y + uy * NODE_R + ux * 8;
  const tx = node.x + ux * NODE_R + uy * 8;
  const ty = node.y + uy * NODE_R - ux * 8;
  const bx = node.x + ux * (NODE_R + 38);
  const by = node.y + uy * (NODE_R + 38);
  return {
    d: `M ${sx.toFixed(1)} ${sy.toFixed(1)} C ${bx.toFixed(1)} ${by.toFixed(1)} ${bx.toFixed(1)} ${by.toFixed(1)} ${tx.toFixed(1)} ${ty.toFixed(1)}`,
    lx: node.x + ux * (NODE_R + 30),
    ly: node.y + uy * (NODE_R + 30),
  };
}

export function renderAutomatonSvg(doc: AutomatonDoc, tokens: number[]): string {
  const layout = circularLayout(doc.states);
  const tokenSet = new Set(tokens);
  const hasReverse = new Set(
    groupEdges(doc)
      .filter((e) => e.from !== e.to)
      .map((e) => `${e.to}->${e.from}`),
  );
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${SIZE} ${SIZE}" width="${SIZE}" height="${SIZE}">`,
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse">',
    '<path d="M 0 0 L 10 5 L 0 10 z" fill="#444"/></marker></defs>',
  );
  for (const edge of groupEdges(doc)) {
    const label = escapeXml(edge.labels.join(','));
    if (edge.from === edge.to) {
      const { d, lx, ly } = loopPath(layout[edge.from]);
      parts.push(
        `<path class="edge loop" d="${d}" fill="none" stroke="#444" marker-end="url(#arrow)"/>`,
        `<text class="edge-label" x="${lx.toFixed(1)}" y="${ly.toFixed(1)}" text-anchor="middle">${label}</text>`,
      );
    } else {
      const bend = hasReverse.has(`${edge.from}->${edge.to}`) ? 18 : 6;
      const { d, lx, ly } = edgePath(layout[edge.from], layout[edge.to], bend);
      parts.push(
        `<path class="edge" d="${d}" fill="none" stroke="#444" marker-end="url(#arrow)"/>`,
        `<text class="edge-label" x="${lx.toFixed(1)}" y="${ly.toFixed(1)}" text-anchor="middle">${label}</text>`,
      );
    }
  }
  for (const node of layout) {
    const fill = tokenSet.has(node.id) ? '#9e9e9e' : '#ffffff';
    parts.push(
      `<circle class="state${tokenSet.has(node.id) ? ' token' : ''}" cx="${node.x.toFixed(1)}" cy="${node.y.toFixed(1)}" r="${NODE_R}" fill="${fill}" stroke="#1a237e" stroke-width="2"/>`,
      `<text class="state-label" x="${node.x.toFixed(1)}" y="${(node.y + 5).toFixed(1)}" text-anchor="middle">${node.id}</text>`,
    );
  }
  parts.push('</svg>');
  return parts.join('\n');
}
