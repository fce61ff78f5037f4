/** Shapes of the JSON the backend serves.  The UI adds nothing to them. */

export interface VariableView {
  slot: number;
  text: string;
  terms: [number[], number][];
  denominator: number[];
  root: number[];
}

export type RelationKind = "none" | "zero" | "commutativity";

export interface QtRelation {
  arrow: [number, number];
  kind: RelationKind;
  paths: number[][];
}

/** Endomorphism-quiver summary; `error` replaces the data when absent. */
export interface QtSummary {
  arrows?: [number, number][];
  relations?: QtRelation[];
  error?: string;
}

export interface SeedState {
  id: string;
  cluster: string;
  type: string;
  n: number;
  quiver: { n: number; b: number[][] };
  arrows: [number, number][];
  variables: VariableView[];
  qt: QtSummary;
}

export interface TypesInfo {
  types: string[];
  gated: string[];
  allow_large: boolean;
}
