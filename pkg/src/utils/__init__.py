# Error types
