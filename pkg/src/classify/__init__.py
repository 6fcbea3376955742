# Homeomorphism types of real loci
