/** Wire types of the curvature service (exact rationals travel as "p/q"). */

export type SignClass = "positive" | "zero" | "negative";

export interface AnalysisDocument {
  n: number;
  edges: [number, number][];
  regime: "unique" | "maximin" | "pseudoinverse";
  curvature: string[];
  curvature_decimal: string[];
  curvature_sign: SignClass[];
  total: string;
  total_decimal: string;
  min: string;
  min_decimal: string;
  diameter: number;
  bm_sharp: boolean;
  self_centered: boolean;
  antipodal: boolean;
  solution_space_dim: number;
  average_distance: string;
  average_distance_decimal: string;
  constant_curvature: boolean;
  bm_upper_bound: string | null;
  bm_bound_unbounded: boolean;
  avdist_bound: string | null;
  maximin_value: string | null;
}

export interface FamilyInfo {
  name: string;
  params: string[];
  description: string;
}

export interface FamilyGraph {
  name: string;
  n: number;
  edges: [number, number][];
}

export interface GraphPayload {
  n: number;
  edges: [number, number][];
}
