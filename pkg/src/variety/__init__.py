# Real toric varieties and their transforms
