/** Squarified treemap layout.
 *
 * Pure geometry: weights in, rectangles out. Zero-weight tiles get a small
 * floor weight so every class stays visible and clickable.
 */

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface LaidOutTile<T> {
  item: T;
  rect: Rect;
}

const MIN_WEIGHT_RATIO = 0.004;

export function squarify<T>(
  items: T[],
  weightOf: (item: T) => number,
  bounds: Rect,
): LaidOutTile<T>[] {
  if (!items.length) return [];
  const rawTotal = items.reduce((acc, item) => acc + Math.max(weightOf(item), 0), 0);
  const floor = rawTotal > 0 ? rawTotal * MIN_WEIGHT_RATIO : 1;
  const weights = items.map((item) => Math.max(weightOf(item), floor));
  const total = weights.reduce((a, b) => a + b, 0);
  const scale = (bounds.w * bounds.h) / total;

  let current: number[] = [];
  let currentArea = 0;
  let free: Rect = { ...bounds };

  const worst = (indices: number[], area: number, side: number): number => {
    const areas = indices.map((i) => weights[i] * scale);
    const maxA = Math.max(...areas);
    const minA = Math.min(...areas);
    const s2 = side * side;
    return Math.max((s2 * maxA) / (area * area), (area * area) / (s2 * minA));
  };

  const layoutRow = (indices: number[], area: number) => {
    const horizontal = free.w >= free.h; // lay the row along the short side
    const side = horizontal ? free.h : free.w;
    const thickness = side > 0 ? area / side : 0;
    let offset = 0;
    for (const i of indices) {
      const length = side > 0 ? (weights[i] * scale) / thickness : 0;
      const rect: Rect = horizontal
        ? { x: free.x, y: free.y + offset, w: thickness, h: length }
        : { x: free.x + offset, y: free.y, w: length, h: thickness };
      rects[i] = rect;
      offset += length;
    }
    if (horizontal) {
      free = { x: free.x + thickness, y: free.y, w: free.w - thickness, h: free.h };
    } else {
      free = { x: free.x, y: free.y + thickness, w: free.w, h: free.h - thickness };
    }
  };

  const rects: Rect[] = new Array(items.length);
  const order = items.map((_, i) => i).sort((a, b) => weights[b] - weights[a]);

  for (const index of order) {
    const side = Math.min(free.w, free.h);
    const area = weights[index] * scale;
    if (!current.length) {
      current = [index];
      currentArea = area;
      continue;
    }
    const before = worst(current, currentArea, side);
    const after = worst([...current, index], currentArea + area, side);
    if (after <= before) {
      current.push(index);
      currentArea += area;
    } else {
      layoutRow(current, currentArea);
      current = [index];
      currentArea = area;
    }
  }
  if (current.length) layoutRow(current, currentArea);

  return items.map((item, i) => ({ item, rect: rects[i] }));
}
